use std::collections::BTreeMap;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::parallel::Execution;
use crate::pos::WordClass;
use crate::stats::{tukey_pairwise_with, MetricSamples, PairwiseMatrix, RangeQuadrature, Transform};

use super::dataset::{HeadlineRecord, TruthLabel};
use super::features::{FeatureExtractor, FeatureRow};

/// Default transform plus per-metric overrides, e.g.
/// `signed-log1p,simplicity=identity`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TransformConfig {
    pub default: Transform,
    pub overrides: BTreeMap<String, Transform>,
}

impl TransformConfig {
    pub fn uniform(transform: Transform) -> Self {
        TransformConfig { default: transform, overrides: BTreeMap::new() }
    }

    pub fn for_metric(&self, metric: &str) -> Transform {
        self.overrides.get(metric).copied().unwrap_or(self.default)
    }
}

impl FromStr for TransformConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut config = TransformConfig::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part.split_once('=') {
                Some((metric, t)) => {
                    config.overrides.insert(metric.trim().to_owned(), t.trim().parse()?);
                }
                None => config.default = part.parse()?,
            }
        }
        Ok(config)
    }
}

pub fn sentiment_metric_name(lexicon: &str) -> String {
    format!("sentiment.{lexicon}")
}

pub const SIMPLICITY_METRIC: &str = "simplicity";

/// Metric names in report order: sentiment per lexicon, simplicity, then the
/// word classes alphabetically.
pub fn metric_names(lexicons: &[&str]) -> Vec<String> {
    let mut names: Vec<String> = lexicons.iter().map(|l| sentiment_metric_name(l)).collect();
    names.push(SIMPLICITY_METRIC.to_owned());
    names.extend(WordClass::ALL.iter().map(|c| c.as_str().to_owned()));
    names
}

fn metric_value(row: &FeatureRow, metric: &str) -> Option<f64> {
    if let Some(lexicon) = metric.strip_prefix("sentiment.") {
        return row.sentiment_for(lexicon);
    }
    if metric == SIMPLICITY_METRIC {
        return Some(row.simplicity);
    }
    metric.parse::<WordClass>().ok().map(|c| row.classes.get(c))
}

/// Extracts features and runs [`validate_rows`].
pub fn validate(
    records: &[HeadlineRecord],
    extractor: &FeatureExtractor,
    transforms: &TransformConfig,
) -> Result<Vec<PairwiseMatrix>> {
    let rows = extractor.extract(records)?;
    validate_rows(records, &rows, &extractor.lexicon_names(), transforms, extractor.execution)
}

/// One Tukey matrix per metric across the six truth categories, in the fixed
/// category order. `rows[i]` must belong to `records[i]`.
pub fn validate_rows(
    records: &[HeadlineRecord],
    rows: &[FeatureRow],
    lexicons: &[&str],
    transforms: &TransformConfig,
    execution: Execution,
) -> Result<Vec<PairwiseMatrix>> {
    let labels = labels_of(records)?;
    let mut counts = [0usize; 6];
    for l in &labels {
        counts[l.index()] += 1;
    }
    for label in TruthLabel::ALL {
        match counts[label.index()] {
            0 => return Err(Error::MissingLabel(label.as_str().to_owned())),
            1 => return Err(Error::DegenerateGroup { label: label.as_str().to_owned(), n: 1 }),
            _ => {}
        }
    }

    let quadrature = RangeQuadrature::default();
    metric_names(lexicons)
        .iter()
        .map(|metric| {
            let mut groups: Vec<(String, Vec<f64>)> =
                TruthLabel::ALL.iter().map(|l| (l.as_str().to_owned(), Vec::new())).collect();
            for (label, row) in labels.iter().zip(rows) {
                let value = metric_value(row, metric)
                    .ok_or_else(|| Error::InvalidArgument(format!("row {} lacks metric {metric}", row.id)))?;
                groups[label.index()].1.push(value);
            }
            let samples = MetricSamples::new(metric, groups)?;
            tukey_pairwise_with(&samples, transforms.for_metric(metric), execution, &quadrature)
        })
        .collect()
}

fn labels_of(records: &[HeadlineRecord]) -> Result<Vec<TruthLabel>> {
    records
        .iter()
        .map(|r| r.label.ok_or_else(|| Error::MissingLabel(format!("record {} is unlabeled", r.id))))
        .collect()
}
