//! Distribution of the studentized range `Q = (max - min) / s` of `k`
//! independent standard normals, where `s ~ chi_df / sqrt(df)` independently.
//!
//! ```text
//! P(Q <= q) = integral_0^inf f_s(s) W(q s) ds
//! W(w)      = k integral phi(z) [Phi(z) - Phi(z - w)]^(k-1) dz
//! f_s(s)    = df^(df/2) s^(df-1) exp(-df s^2 / 2) / (Gamma(df/2) 2^(df/2 - 1))
//! ```
//!
//! The inner range probability `W` uses a fixed composite Gauss-Legendre
//! rule with precomputed normal densities and CDFs at the nodes; the outer
//! integral over `s` is adaptive and restricted to the bulk of the scaled chi
//! density.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::sync::OnceLock;

use libm::{erf, erfc, lgamma as ln_gamma};

use super::quadrature::{gauss_legendre, AdaptiveQuadrature};
use crate::error::{Error, Result};

/// Settings for the outer (scaled chi) integral.
#[derive(Debug, Clone)]
pub struct RangeQuadrature {
    outer: AdaptiveQuadrature,
}

impl RangeQuadrature {
    pub fn new(abs_tol: f64, max_panels: usize) -> Self {
        RangeQuadrature { outer: AdaptiveQuadrature::new(10, abs_tol, max_panels, 4) }
    }

    fn shared() -> &'static RangeQuadrature {
        static DEFAULT: OnceLock<RangeQuadrature> = OnceLock::new();
        DEFAULT.get_or_init(RangeQuadrature::default)
    }
}

impl Default for RangeQuadrature {
    /// Absolute tolerance 1e-9 with a budget of 2048 panels.
    fn default() -> Self {
        RangeQuadrature::new(1e-9, 2048)
    }
}

/// Upper normal tail `P(Z > x)`.
fn normal_sf(x: f64) -> f64 {
    0.5 * erfc(x * FRAC_1_SQRT_2)
}

struct InnerNodes {
    z: Vec<f64>,
    /// Quadrature weight times the normal density.
    weighted_pdf: Vec<f64>,
    cdf: Vec<f64>,
    sf: Vec<f64>,
}

const INNER_LIMIT: f64 = 8.5;
const INNER_PANELS: usize = 17;
const INNER_ORDER: usize = 10;

fn inner_nodes() -> &'static InnerNodes {
    static NODES: OnceLock<InnerNodes> = OnceLock::new();
    NODES.get_or_init(|| {
        let (x, w) = gauss_legendre(INNER_ORDER);
        let width = 2.0 * INNER_LIMIT / INNER_PANELS as f64;
        let mut nodes = InnerNodes { z: Vec::new(), weighted_pdf: Vec::new(), cdf: Vec::new(), sf: Vec::new() };
        for p in 0..INNER_PANELS {
            let mid = -INNER_LIMIT + width * (p as f64 + 0.5);
            for (xi, wi) in x.iter().zip(&w) {
                let z = mid + 0.5 * width * xi;
                let pdf = (-0.5 * z * z).exp() / (2.0 * PI).sqrt();
                nodes.z.push(z);
                nodes.weighted_pdf.push(0.5 * width * wi * pdf);
                nodes.cdf.push(normal_sf(-z));
                nodes.sf.push(normal_sf(z));
            }
        }
        nodes
    })
}

/// `P(range of k standard normals <= w)`.
pub(crate) fn normal_range_cdf(w: f64, k: usize) -> f64 {
    if w <= 0.0 {
        return 0.0;
    }
    if k == 2 {
        // range of two normals is |Z1 - Z2| ~ |N(0, 2)|
        return erf(0.5 * w);
    }
    if w > 40.0 {
        return 1.0;
    }
    let nodes = inner_nodes();
    let exponent = (k - 1) as i32;
    let mut sum = 0.0;
    for i in 0..nodes.z.len() {
        let shifted = nodes.z[i] - w;
        // difference of tails where both CDFs are near 1, avoids cancellation
        let bracket =
            if shifted >= 0.0 { normal_sf(shifted) - nodes.sf[i] } else { nodes.cdf[i] - normal_sf(-shifted) };
        if bracket > 0.0 {
            sum += nodes.weighted_pdf[i] * bracket.powi(exponent);
        }
    }
    (k as f64 * sum).clamp(0.0, 1.0)
}

struct ScaledChi {
    df: f64,
    log_norm: f64,
}

impl ScaledChi {
    fn new(df: usize) -> Self {
        let df = df as f64;
        let log_norm = std::f64::consts::LN_2 + 0.5 * df * (0.5 * df).ln() - ln_gamma(0.5 * df);
        ScaledChi { df, log_norm }
    }

    fn pdf(&self, s: f64) -> f64 {
        if s <= 0.0 {
            return if self.df == 1.0 && s == 0.0 { self.log_norm.exp() } else { 0.0 };
        }
        (self.log_norm + (self.df - 1.0) * s.ln() - 0.5 * self.df * s * s).exp()
    }

    /// An interval holding all but a negligible tail of the density.
    fn support(&self) -> (f64, f64) {
        let df = self.df;
        let mean = if df > 1e4 {
            1.0 - 0.25 / df
        } else {
            (2.0 / df).sqrt() * (ln_gamma(0.5 * (df + 1.0)) - ln_gamma(0.5 * df)).exp()
        };
        let sd = if df > 1e4 { (0.5 / df).sqrt() } else { (1.0 - mean * mean).max(0.0).sqrt() };
        ((mean - 12.0 * sd).max(0.0), mean + 12.0 * sd)
    }
}

fn check_arguments(q: f64, k: usize, df: usize) -> Result<()> {
    if q.is_nan() || q < 0.0 {
        return Err(Error::InvalidArgument(format!("studentized range q must be >= 0, got {q}")));
    }
    if k < 2 {
        return Err(Error::InvalidArgument(format!("studentized range needs k >= 2, got {k}")));
    }
    if df < 1 {
        return Err(Error::InvalidArgument("studentized range needs df >= 1".into()));
    }
    Ok(())
}

/// `P(Q <= q)` for `k` groups and `df` error degrees of freedom.
pub fn studentized_range_cdf(q: f64, k: usize, df: usize) -> Result<f64> {
    studentized_range_cdf_with(q, k, df, RangeQuadrature::shared())
}

pub fn studentized_range_cdf_with(q: f64, k: usize, df: usize, quadrature: &RangeQuadrature) -> Result<f64> {
    check_arguments(q, k, df)?;
    if q == 0.0 {
        return Ok(0.0);
    }
    if q.is_infinite() {
        return Ok(1.0);
    }
    let chi = ScaledChi::new(df);
    let (lo, hi) = chi.support();
    let value = quadrature.outer.integrate(|s| chi.pdf(s) * normal_range_cdf(q * s, k), lo, hi)?;
    Ok(value.clamp(0.0, 1.0))
}

/// `P(Q > q)`, the Tukey p-value for an observed statistic `q`.
pub fn studentized_range_sf(q: f64, k: usize, df: usize) -> Result<f64> {
    Ok((1.0 - studentized_range_cdf(q, k, df)?).clamp(0.0, 1.0))
}
