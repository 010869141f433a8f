//! Dataset ingestion, feature extraction, validation reports, threshold
//! calibration and the three-cue flagger.

mod dataset;
mod features;
mod fixture;
mod flag;
mod report;
mod validate;

pub use dataset::{ingest, ingest_reader, write_csv, Dataset, DatasetFormat, HeadlineRecord, IngestReport, TruthLabel};
pub use features::{extract_features, write_features_csv, FeatureExtractor, FeatureRow};
pub use fixture::{generate_fixture, DEFAULT_SEED, FIXTURE_COUNTS};
pub use flag::{
    calibrate_thresholds, flag, flag_all, flag_row, nearest_rank, CalibrationMeta, ClassCut, ClassDirections,
    Direction, FlagResult, FlagThresholds, CUE_CLASSES,
};
pub use report::{
    parse_alpha_grid, render_csv, render_markdown, render_report, ReportFormat, ReportOptions, CSV_HEADER,
};
pub use validate::{metric_names, sentiment_metric_name, validate, validate_rows, TransformConfig, SIMPLICITY_METRIC};
