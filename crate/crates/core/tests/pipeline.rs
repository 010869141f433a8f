mod common;

use lesie::parallel::Execution;
use lesie::pipeline::{
    calibrate_thresholds, flag_all, generate_fixture, ingest_reader, validate_rows, write_csv, ClassDirections,
    DatasetFormat, FeatureExtractor, TransformConfig, TruthLabel, FIXTURE_COUNTS,
};
use lesie::pos::Tagger;
use lesie::Error;

use common::{fixture_path, synthetic_dataset};

#[test]
fn bundled_fixture_matches_generator() {
    let mut bytes = Vec::new();
    write_csv(&generate_fixture(1, FIXTURE_COUNTS), &mut bytes).unwrap();
    assert_eq!(bytes, std::fs::read(fixture_path("synthetic_headlines.csv")).unwrap());

    let dataset = synthetic_dataset();
    assert_eq!(dataset.report.counts, FIXTURE_COUNTS);
    assert_eq!(dataset.report.total, FIXTURE_COUNTS.iter().sum::<usize>());
    assert_eq!(dataset.report.unlabeled, 0);
    assert!(dataset.records.iter().all(|r| r.pretags.is_some()));
}

#[test]
fn csv_and_jsonl_ingest_agree() {
    let csv = "id,text,label\na,\"Obama bans guns, again\",false\nb,Walker approved the budget,\n";
    let jsonl = concat!(
        "{\"id\":\"a\",\"text\":\"Obama bans guns, again\",\"label\":\"false\"}\n",
        "\n",
        "{\"id\":\"b\",\"text\":\"Walker approved the budget\"}\n",
    );
    let from_csv = ingest_reader(csv.as_bytes(), DatasetFormat::Csv).unwrap();
    let from_jsonl = ingest_reader(jsonl.as_bytes(), DatasetFormat::Jsonl).unwrap();
    assert_eq!(from_csv.records, from_jsonl.records);
    assert_eq!(from_csv.report.count(TruthLabel::False), 1);
    assert_eq!(from_csv.report.unlabeled, 1);
}

#[test]
fn ingest_errors_carry_context() {
    let dup = ingest_reader("id,text\na,x\na,y\n".as_bytes(), DatasetFormat::Csv).unwrap_err();
    assert!(matches!(dup, Error::DuplicateId(ref id) if id == "a"));
    let label = ingest_reader("id,text,label\na,x,maybe\n".as_bytes(), DatasetFormat::Csv).unwrap_err();
    assert!(matches!(label, Error::UnknownLabel { line: 2, .. }));
    let json = ingest_reader("{\"id\":\"a\",\"text\":\"x\"}\n{oops\n".as_bytes(), DatasetFormat::Jsonl).unwrap_err();
    assert!(matches!(json, Error::ParseError { line: 2, .. }));
}

#[test]
fn sequential_and_parallel_agree() {
    let records = &synthetic_dataset().records[..1200];
    let sequential = FeatureExtractor::bundled(Tagger::Builtin).with_execution(Execution::Sequential);
    let parallel = FeatureExtractor::bundled(Tagger::Builtin).with_execution(Execution::Parallel);
    let rows = sequential.extract(records).unwrap();
    assert_eq!(rows, parallel.extract(records).unwrap());

    let names = sequential.lexicon_names();
    let transforms = TransformConfig::default();
    let a = validate_rows(records, &rows, &names, &transforms, Execution::Sequential).unwrap();
    let b = validate_rows(records, &rows, &names, &transforms, Execution::Parallel).unwrap();
    assert_eq!(a, b);

    let thresholds = calibrate_thresholds(records, &rows, 0.9, ClassDirections::default(), "x").unwrap();
    assert_eq!(
        flag_all(records, &thresholds, &sequential).unwrap(),
        flag_all(records, &thresholds, &parallel).unwrap()
    );
}

#[test]
fn pretagged_and_builtin_tagging_mostly_agree() {
    let records = &synthetic_dataset().records[..2000];
    let gold = FeatureExtractor::bundled(Tagger::Pretagged).extract(records).unwrap();
    let builtin = FeatureExtractor::bundled(Tagger::Builtin).extract(records).unwrap();
    let same = gold.iter().zip(&builtin).filter(|(g, b)| g.classes == b.classes).count();
    assert!(same as f64 / records.len() as f64 > 0.9, "{same} of {}", records.len());
    for (g, b) in gold.iter().zip(&builtin) {
        assert_eq!(g.sentiment, b.sentiment);
        assert_eq!(g.simplicity, b.simplicity);
    }
}
