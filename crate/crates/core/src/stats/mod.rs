//! Group summaries, the studentized range distribution and Tukey-Kramer
//! pairwise comparisons.

mod quadrature;
mod range;
mod summary;
mod transform;
mod tukey;

pub use quadrature::{gauss_legendre, AdaptiveQuadrature};
pub use range::{studentized_range_cdf, studentized_range_cdf_with, studentized_range_sf, RangeQuadrature};
pub use summary::{summarize, AnovaContext, GroupSummary, MetricSamples};
pub use transform::{apply_transform, Transform};
pub use tukey::{tukey_pairwise, tukey_pairwise_with, PairwiseMatrix, TukeyWarning};
