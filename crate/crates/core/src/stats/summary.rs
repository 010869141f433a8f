use crate::error::{Error, Result};

/// Values of one metric, grouped by category label in insertion order.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricSamples {
    metric_name: String,
    groups: Vec<(String, Vec<f64>)>,
}

impl MetricSamples {
    /// Requires at least two uniquely labelled groups of at least two finite values each.
    pub fn new<L, I>(metric_name: &str, groups: I) -> Result<Self>
    where
        L: Into<String>,
        I: IntoIterator<Item = (L, Vec<f64>)>,
    {
        let groups: Vec<(String, Vec<f64>)> = groups.into_iter().map(|(l, v)| (l.into(), v)).collect();
        if groups.len() < 2 {
            return Err(Error::TooFewGroups(groups.len()));
        }
        for (i, (label, values)) in groups.iter().enumerate() {
            if groups[..i].iter().any(|(other, _)| other == label) {
                return Err(Error::DuplicateGroup(label.clone()));
            }
            if values.len() < 2 {
                return Err(Error::DegenerateGroup { label: label.clone(), n: values.len() });
            }
            if values.iter().any(|v| !v.is_finite()) {
                return Err(Error::NonFiniteValue(label.clone()));
            }
        }
        Ok(MetricSamples { metric_name: metric_name.to_owned(), groups })
    }

    pub fn metric_name(&self) -> &str {
        &self.metric_name
    }

    pub fn groups(&self) -> &[(String, Vec<f64>)] {
        &self.groups
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.groups.iter().map(|(l, _)| l.as_str())
    }

    /// Applies `f` to every value, keeping the grouping.
    pub fn map_values(&self, f: impl Fn(f64) -> f64) -> Self {
        MetricSamples {
            metric_name: self.metric_name.clone(),
            groups: self.groups.iter().map(|(l, v)| (l.clone(), v.iter().map(|&x| f(x)).collect())).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroupSummary {
    pub label: String,
    pub n: usize,
    pub mean: f64,
    /// Unbiased (divisor `n - 1`).
    pub variance: f64,
}

/// Pooled within-group variance and its error degrees of freedom.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnovaContext {
    pub mse: f64,
    pub df: usize,
}

pub fn summarize(samples: &MetricSamples) -> Result<(Vec<GroupSummary>, AnovaContext)> {
    let mut summaries = Vec::with_capacity(samples.groups.len());
    let mut sum_squares = 0.0;
    let mut total = 0usize;
    for (label, values) in &samples.groups {
        let n = values.len();
        if n < 2 {
            return Err(Error::DegenerateGroup { label: label.clone(), n });
        }
        let mean = values.iter().sum::<f64>() / n as f64;
        let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
        sum_squares += ss;
        total += n;
        summaries.push(GroupSummary { label: label.clone(), n, mean, variance: ss / (n - 1) as f64 });
    }
    let df = total - samples.groups.len();
    Ok((summaries, AnovaContext { mse: sum_squares / df as f64, df }))
}
