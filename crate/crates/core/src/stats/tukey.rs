use super::range::studentized_range_cdf_with;
use super::summary::{summarize, MetricSamples};
use super::transform::Transform;
use super::RangeQuadrature;
use crate::error::Result;
use crate::parallel::Execution;

/// Raised when the pooled variance is zero but two group means differ; the
/// pair's p-value is reported as 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TukeyWarning {
    pub first: String,
    pub second: String,
}

/// Symmetric matrix of Tukey-Kramer p-values with a unit diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct PairwiseMatrix {
    pub metric_name: String,
    pub labels: Vec<String>,
    pub p: Vec<Vec<f64>>,
    pub warnings: Vec<TukeyWarning>,
}

impl PairwiseMatrix {
    pub fn k(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, a: &str, b: &str) -> Option<f64> {
        let i = self.labels.iter().position(|l| l == a)?;
        let j = self.labels.iter().position(|l| l == b)?;
        Some(self.p[i][j])
    }

    /// Smallest off-diagonal p-value.
    pub fn min_p(&self) -> f64 {
        let mut min = 1.0f64;
        for i in 0..self.k() {
            for j in (i + 1)..self.k() {
                min = min.min(self.p[i][j]);
            }
        }
        min
    }
}

pub fn tukey_pairwise(samples: &MetricSamples, transform: Transform) -> Result<PairwiseMatrix> {
    tukey_pairwise_with(samples, transform, Execution::default(), &RangeQuadrature::default())
}

/// Tukey-Kramer comparisons of every pair of groups after `transform`:
/// `q = |mean_i - mean_j| / sqrt(mse / 2 * (1/n_i + 1/n_j))`, `p = P(Q > q)`
/// for `k` groups and `N - k` degrees of freedom.
pub fn tukey_pairwise_with(
    samples: &MetricSamples,
    transform: Transform,
    execution: Execution,
    quadrature: &RangeQuadrature,
) -> Result<PairwiseMatrix> {
    let transformed = samples.map_values(|x| transform.apply(x));
    let (groups, anova) = summarize(&transformed)?;
    let k = groups.len();

    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| ((i + 1)..k).map(move |j| (i, j))).collect();
    let cells = execution.try_map(&pairs, |&(i, j)| {
        let (a, b) = (&groups[i], &groups[j]);
        let diff = (a.mean - b.mean).abs();
        if anova.mse == 0.0 {
            return Ok(if diff == 0.0 { (1.0, false) } else { (0.0, true) });
        }
        let se = (0.5 * anova.mse * (1.0 / a.n as f64 + 1.0 / b.n as f64)).sqrt();
        let cdf = studentized_range_cdf_with(diff / se, k, anova.df, quadrature)?;
        Ok(((1.0 - cdf).clamp(0.0, 1.0), false))
    })?;

    let mut p = vec![vec![1.0; k]; k];
    let mut warnings = Vec::new();
    for (&(i, j), (value, zero_variance)) in pairs.iter().zip(cells) {
        p[i][j] = value;
        p[j][i] = value;
        if zero_variance {
            warnings.push(TukeyWarning { first: groups[i].label.clone(), second: groups[j].label.clone() });
        }
    }
    Ok(PairwiseMatrix {
        metric_name: samples.metric_name().to_owned(),
        labels: groups.into_iter().map(|g| g.label).collect(),
        p,
        warnings,
    })
}
