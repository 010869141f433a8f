use crate::error::{Error, Result};

/// Gauss-Legendre nodes and weights on `[-1, 1]`, by Newton iteration on the
/// Legendre polynomial roots.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "at least one node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        // Tricomi initial guess for the i-th largest root
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre(n, x);
            let step = p / dp;
            x -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let n = n as f64;
    (p1, n * (x * p1 - p0) / (x * x - 1.0))
}

/// Adaptive bisection over fixed-order Gauss-Legendre panels.
///
/// Each panel estimate is compared with the sum of its two halves; panels
/// whose difference exceeds their share of the tolerance are split again.
#[derive(Debug, Clone)]
pub struct AdaptiveQuadrature {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    pub abs_tol: f64,
    pub max_panels: usize,
    pub initial_panels: usize,
}

impl AdaptiveQuadrature {
    pub fn new(order: usize, abs_tol: f64, max_panels: usize, initial_panels: usize) -> Self {
        let (nodes, weights) = gauss_legendre(order);
        AdaptiveQuadrature { nodes, weights, abs_tol, max_panels, initial_panels: initial_panels.max(1) }
    }

    fn rule(&self, f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes.iter().zip(&self.weights).map(|(x, w)| w * f(mid + half * x)).sum::<f64>() * half
    }

    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64, a: f64, b: f64) -> Result<f64> {
        let width = (b - a) / self.initial_panels as f64;
        let mut stack = Vec::new();
        for i in 0..self.initial_panels {
            let lo = a + width * i as f64;
            let hi = if i + 1 == self.initial_panels { b } else { lo + width };
            let whole = self.rule(&mut f, lo, hi);
            stack.push((lo, hi, whole, self.abs_tol / self.initial_panels as f64));
        }

        let mut panels = self.initial_panels;
        let mut total = 0.0;
        while let Some((lo, hi, whole, tol)) = stack.pop() {
            let mid = 0.5 * (lo + hi);
            let left = self.rule(&mut f, lo, mid);
            let right = self.rule(&mut f, mid, hi);
            panels += 2;
            if !(left.is_finite() && right.is_finite()) {
                return Err(Error::NumericalFailure(format!("non-finite integrand on [{lo}, {hi}]")));
            }
            if (left + right - whole).abs() <= tol {
                total += left + right;
                continue;
            }
            if panels >= self.max_panels {
                return Err(Error::NumericalFailure(format!(
                    "quadrature did not converge within {} panels",
                    self.max_panels
                )));
            }
            stack.push((lo, mid, left, 0.5 * tol));
            stack.push((mid, hi, right, 0.5 * tol));
        }
        Ok(total)
    }
}
