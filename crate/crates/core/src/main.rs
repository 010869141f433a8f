use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lesie::lexicon::PolarityLexicon;
use lesie::pipeline::{
    calibrate_thresholds, flag_all, generate_fixture, ingest, parse_alpha_grid, render_report, validate_rows,
    write_csv, write_features_csv, ClassDirections, Dataset, DatasetFormat, Direction, FeatureExtractor,
    FlagThresholds, HeadlineRecord, ReportFormat, ReportOptions, TransformConfig, DEFAULT_SEED, FIXTURE_COUNTS,
};
use lesie::pos::{Tagger, WordClass};
use lesie::{Error, Result};

#[derive(Parser)]
#[command(name = "lesie", version, about = "Headline emotion, simplicity and lexical-structure metrics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute per-headline features as CSV.
    Features {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        metrics: MetricArgs,
        /// Output file (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tukey pairwise comparison of every metric across truth categories.
    Validate {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        metrics: MetricArgs,
        /// Transform, optionally with per-metric overrides: `signed-log1p,simplicity=identity`.
        #[arg(long, default_value = "signed-log1p")]
        transform: String,
        /// Output directory (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "markdown")]
        report: String,
        /// Significance levels for report annotations.
        #[arg(long, default_value = "0.01,0.05,0.10")]
        alpha_grid: String,
        /// Write CSV p-values with full precision instead of 3 decimals.
        #[arg(long)]
        full_precision: bool,
    },
    /// Calibrate flag thresholds against the true-labeled headlines.
    Calibrate {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        metrics: MetricArgs,
        #[arg(long, default_value_t = 0.90, value_parser = parse_quantile)]
        quantile: f64,
        /// Flag a word class when below its cut instead of above, e.g. `--direction verb=below`.
        #[arg(long = "direction", value_name = "CLASS=above|below")]
        directions: Vec<String>,
        /// Thresholds file to write (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report which cues each headline triggers, one JSON object per line.
    Flag {
        #[arg(long)]
        thresholds: PathBuf,
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        text: Option<String>,
        /// Space-separated tags for `--text` with the pretagged tagger.
        #[arg(long, requires = "text")]
        tags: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        format: Option<String>,
        #[command(flatten)]
        metrics: MetricArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lexicon utilities.
    Lexicon {
        #[command(subcommand)]
        command: LexiconCommand,
    },
    /// Write the seeded synthetic headline corpus.
    Fixture {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum LexiconCommand {
    /// Print a lexicon in canonical form.
    Dump {
        /// `LM`, `GENERIC` or `NAME=PATH`.
        #[arg(default_value = "LM")]
        lexicon: String,
    },
}

#[derive(Args)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
    /// `csv` or `jsonl`; inferred from the extension when omitted.
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args)]
struct MetricArgs {
    /// Polarity lexicon as `NAME=PATH`, or `LM` / `GENERIC` for a bundled list. Repeatable.
    #[arg(long = "lexicon", value_name = "NAME=PATH")]
    lexicons: Vec<String>,
    #[arg(long, default_value = "builtin")]
    tagger: String,
}

fn parse_quantile(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(q) if q > 0.0 && q < 1.0 => Ok(q),
        _ => Err(format!("quantile must lie strictly between 0 and 1, got {s}")),
    }
}

fn load_lexicon(spec: &str) -> Result<PolarityLexicon> {
    match spec.split_once('=') {
        Some((name, path)) => PolarityLexicon::load(path, name),
        None => match spec.to_ascii_uppercase().as_str() {
            "LM" => Ok(PolarityLexicon::bundled_lm()),
            "GENERIC" => Ok(PolarityLexicon::bundled_generic()),
            _ => Err(Error::InvalidArgument(format!("expected NAME=PATH or a bundled lexicon name, got {spec:?}"))),
        },
    }
}

impl MetricArgs {
    fn extractor(&self) -> Result<FeatureExtractor> {
        let tagger: Tagger = self.tagger.parse()?;
        if self.lexicons.is_empty() {
            return Ok(FeatureExtractor::bundled(tagger));
        }
        let lexicons = self.lexicons.iter().map(|s| load_lexicon(s)).collect::<Result<Vec<_>>>()?;
        Ok(FeatureExtractor::new(lexicons, tagger))
    }
}

fn dataset_format(path: &Path, format: Option<&str>) -> Result<DatasetFormat> {
    format.map_or_else(|| Ok(DatasetFormat::from_path(path)), str::parse)
}

impl InputArgs {
    fn load(&self) -> Result<Dataset> {
        let dataset = ingest(&self.input, dataset_format(&self.input, self.format.as_deref())?)?;
        eprintln!("{}", dataset.report);
        Ok(dataset)
    }
}

fn sink(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn parse_directions(specs: &[String]) -> Result<ClassDirections> {
    let mut directions = ClassDirections::default();
    for spec in specs {
        let (class, direction) = spec
            .split_once('=')
            .ok_or_else(|| Error::InvalidArgument(format!("expected CLASS=above|below, got {spec:?}")))?;
        directions.set(class.trim().parse::<WordClass>()?, direction.parse::<Direction>()?)?;
    }
    Ok(directions)
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Features { input, metrics, out } => {
            let dataset = input.load()?;
            let extractor = metrics.extractor()?;
            let rows = extractor.extract(&dataset.records)?;
            write_features_csv(&rows, &extractor.lexicon_names(), sink(out.as_deref())?)
        }
        Command::Validate { input, metrics, transform, out, report, alpha_grid, full_precision } => {
            let transforms: TransformConfig = transform.parse()?;
            let format: ReportFormat = report.parse()?;
            let options = ReportOptions { alpha_grid: parse_alpha_grid(&alpha_grid)?, full_precision };
            let dataset = input.load()?;
            let extractor = metrics.extractor()?;
            let rows = extractor.extract(&dataset.records)?;
            let matrices =
                validate_rows(&dataset.records, &rows, &extractor.lexicon_names(), &transforms, extractor.execution)?;
            for m in &matrices {
                for w in &m.warnings {
                    eprintln!(
                        "warning: {}: zero pooled variance, {} vs {} reported as p = 0",
                        m.metric_name, w.first, w.second
                    );
                }
            }
            let path = match out {
                Some(dir) => {
                    fs::create_dir_all(&dir)?;
                    Some(dir.join(format!("validation.{}", format.extension())))
                }
                None => None,
            };
            render_report(&matrices, format, &options, sink(path.as_deref())?)
        }
        Command::Calibrate { input, metrics, quantile, directions, out } => {
            let directions = parse_directions(&directions)?;
            let dataset = input.load()?;
            let rows = metrics.extractor()?.extract(&dataset.records)?;
            let source = input.input.display().to_string();
            let thresholds = calibrate_thresholds(&dataset.records, &rows, quantile, directions, &source)?;
            let mut w = sink(out.as_deref())?;
            write!(w, "{thresholds}")?;
            w.flush()?;
            Ok(())
        }
        Command::Flag { thresholds, text, tags, input, format, metrics, out } => {
            let thresholds = FlagThresholds::load(&thresholds)?;
            let records = match (text, input) {
                (Some(text), _) => {
                    let record = HeadlineRecord::new("text", &text, None)?;
                    vec![match tags {
                        Some(t) => record.with_pretags(t),
                        None => record,
                    }]
                }
                (None, Some(path)) => {
                    let dataset = ingest(&path, dataset_format(&path, format.as_deref())?)?;
                    dataset.records
                }
                (None, None) => return Err(Error::InvalidArgument("either --text or --input is required".into())),
            };
            let results = flag_all(&records, &thresholds, &metrics.extractor()?)?;
            let mut w = sink(out.as_deref())?;
            for r in results {
                writeln!(w, "{}", r.to_json())?;
            }
            w.flush()?;
            Ok(())
        }
        Command::Lexicon { command: LexiconCommand::Dump { lexicon } } => {
            let mut w = sink(None)?;
            w.write_all(load_lexicon(&lexicon)?.dump().as_bytes())?;
            w.flush()?;
            Ok(())
        }
        Command::Fixture { seed, out } => write_csv(&generate_fixture(seed, FIXTURE_COUNTS), sink(out.as_deref())?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_numerical() { 2 } else { 1 })
        }
    }
}
