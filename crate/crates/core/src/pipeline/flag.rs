use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pos::WordClass;

use super::dataset::{HeadlineRecord, TruthLabel};
use super::features::{FeatureExtractor, FeatureRow};

/// Word classes that form the lexical cue. Modal is excluded.
pub const CUE_CLASSES: [WordClass; 4] = [WordClass::Verb, WordClass::Adjective, WordClass::Name, WordClass::Number];

/// Side of a class cut that counts as suspicious.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Direction {
    #[default]
    Above,
    Below,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Above => "above",
            Direction::Below => "below",
        }
    }

    fn triggers(self, value: f64, cut: f64) -> bool {
        match self {
            Direction::Above => value > cut,
            Direction::Below => value < cut,
        }
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "above" => Ok(Direction::Above),
            "below" => Ok(Direction::Below),
            other => Err(Error::InvalidArgument(format!("unknown direction {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassCut {
    pub class: WordClass,
    pub cut: f64,
    pub direction: Direction,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CalibrationMeta {
    pub source: String,
    pub quantile: f64,
}

/// Cue cutoffs calibrated against true-labeled headlines.
#[derive(Debug, Clone, PartialEq)]
pub struct FlagThresholds {
    /// Emotion cue fires when any lexicon's |sentiment| exceeds this.
    pub sentiment_abs_cut: f64,
    /// Simplicity cue fires when letters per word falls below this.
    pub simplicity_cut: f64,
    /// One entry per [`CUE_CLASSES`] member, in that order.
    pub class_cuts: Vec<ClassCut>,
    pub meta: CalibrationMeta,
}

/// Per-class directions used during calibration; defaults to all above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassDirections([Direction; 4]);

impl ClassDirections {
    pub fn get(&self, class: WordClass) -> Direction {
        CUE_CLASSES.iter().position(|c| *c == class).map_or(Direction::Above, |i| self.0[i])
    }

    pub fn set(&mut self, class: WordClass, direction: Direction) -> Result<()> {
        let i = CUE_CLASSES
            .iter()
            .position(|c| *c == class)
            .ok_or_else(|| Error::InvalidArgument(format!("{class} is not a cue class")))?;
        self.0[i] = direction;
        Ok(())
    }
}

/// Nearest-rank empirical quantile: the smallest value with at least
/// `p * n` values at or below it.
pub fn nearest_rank(values: &[f64], p: f64) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let rank = (p * sorted.len() as f64 - 1e-9).ceil().max(1.0) as usize;
    sorted[rank.min(sorted.len()) - 1]
}

fn check_quantile(q: f64) -> Result<()> {
    if q > 0.0 && q < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("quantile must lie strictly between 0 and 1, got {q}")))
    }
}

/// Calibrates cutoffs from the true-labeled rows. `rows[i]` must belong to
/// `records[i]`.
pub fn calibrate_thresholds(
    records: &[HeadlineRecord],
    rows: &[FeatureRow],
    quantile: f64,
    directions: ClassDirections,
    source: &str,
) -> Result<FlagThresholds> {
    check_quantile(quantile)?;
    let truth: Vec<&FeatureRow> =
        records.iter().zip(rows).filter(|(r, _)| r.label == Some(TruthLabel::True)).map(|(_, row)| row).collect();
    if truth.is_empty() {
        return Err(Error::MissingLabel(TruthLabel::True.as_str().to_owned()));
    }

    let column = |f: &dyn Fn(&FeatureRow) -> f64| truth.iter().map(|r| f(r)).collect::<Vec<_>>();
    let class_cuts = CUE_CLASSES
        .iter()
        .map(|&class| {
            let direction = directions.get(class);
            let p = match direction {
                Direction::Above => quantile,
                Direction::Below => 1.0 - quantile,
            };
            ClassCut { class, cut: nearest_rank(&column(&|r| r.classes.get(class)), p), direction }
        })
        .collect();
    Ok(FlagThresholds {
        sentiment_abs_cut: nearest_rank(&column(&FeatureRow::max_abs_sentiment), quantile),
        simplicity_cut: nearest_rank(&column(&|r| r.simplicity), 1.0 - quantile),
        class_cuts,
        meta: CalibrationMeta { source: source.to_owned(), quantile },
    })
}

/// Which cues a headline triggers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlagResult {
    pub id: String,
    pub cue_emotion: bool,
    pub cue_simplicity: bool,
    pub cue_lexical: bool,
    pub triggered_classes: Vec<&'static str>,
    pub score: u8,
}

impl FlagResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("flag results always serialize")
    }
}

/// Applies the thresholds to an already extracted feature row.
pub fn flag_row(row: &FeatureRow, thresholds: &FlagThresholds) -> FlagResult {
    let cue_emotion = row.sentiment.iter().any(|(_, v)| v.abs() > thresholds.sentiment_abs_cut);
    let cue_simplicity = row.simplicity < thresholds.simplicity_cut;
    let triggered_classes: Vec<&'static str> = thresholds
        .class_cuts
        .iter()
        .filter(|c| c.direction.triggers(row.classes.get(c.class), c.cut))
        .map(|c| c.class.as_str())
        .collect();
    let cue_lexical = !triggered_classes.is_empty();
    FlagResult {
        id: row.id.clone(),
        cue_emotion,
        cue_simplicity,
        cue_lexical,
        triggered_classes,
        score: cue_emotion as u8 + cue_simplicity as u8 + cue_lexical as u8,
    }
}

pub fn flag(record: &HeadlineRecord, thresholds: &FlagThresholds, extractor: &FeatureExtractor) -> Result<FlagResult> {
    Ok(flag_row(&extractor.row(record)?, thresholds))
}

pub fn flag_all(
    records: &[HeadlineRecord],
    thresholds: &FlagThresholds,
    extractor: &FeatureExtractor,
) -> Result<Vec<FlagResult>> {
    let rows = extractor.extract(records)?;
    Ok(rows.iter().map(|r| flag_row(r, thresholds)).collect())
}

impl fmt::Display for FlagThresholds {
    /// Flat `key = value` lines, readable by [`FlagThresholds::from_str`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# lesie flag thresholds")?;
        writeln!(f, "calibration.source = {}", self.meta.source)?;
        writeln!(f, "calibration.quantile = {}", self.meta.quantile)?;
        writeln!(f, "sentiment_abs_cut = {}", self.sentiment_abs_cut)?;
        writeln!(f, "simplicity_cut = {}", self.simplicity_cut)?;
        for c in &self.class_cuts {
            writeln!(f, "class_cut.{} = {}", c.class, c.cut)?;
            writeln!(f, "class_direction.{} = {}", c.class, c.direction.as_str())?;
        }
        Ok(())
    }
}

impl FromStr for FlagThresholds {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut source = None;
        let mut quantile = None;
        let mut sentiment = None;
        let mut simplicity = None;
        let mut cuts: [Option<f64>; 4] = [None; 4];
        let mut directions = ClassDirections::default();

        for (i, line) in s.lines().enumerate() {
            let line_no = i as u64 + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_error = |message: String| Error::ParseError { line: line_no, message };
            let (key, value) =
                line.split_once('=').ok_or_else(|| parse_error(format!("expected key = value, got {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            let number = || -> Result<f64> {
                let v: f64 = value.parse().map_err(|_| parse_error(format!("{key}: not a number: {value:?}")))?;
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(parse_error(format!("{key}: value must be finite")))
                }
            };
            let class_index = |name: &str| -> Result<usize> {
                let class: WordClass = name.parse().map_err(|_| parse_error(format!("unknown class {name:?}")))?;
                CUE_CLASSES
                    .iter()
                    .position(|c| *c == class)
                    .ok_or_else(|| parse_error(format!("{name} is not a cue class")))
            };
            match key {
                "calibration.source" => source = Some(value.to_owned()),
                "calibration.quantile" => quantile = Some(number()?),
                "sentiment_abs_cut" => sentiment = Some(number()?),
                "simplicity_cut" => simplicity = Some(number()?),
                _ => {
                    if let Some(name) = key.strip_prefix("class_cut.") {
                        cuts[class_index(name)?] = Some(number()?);
                    } else if let Some(name) = key.strip_prefix("class_direction.") {
                        let d = value.parse().map_err(|e: Error| parse_error(e.to_string()))?;
                        directions.0[class_index(name)?] = d;
                    } else {
                        return Err(parse_error(format!("unknown key {key:?}")));
                    }
                }
            }
        }

        let missing = |key: &str| Error::ParseError { line: 0, message: format!("missing key {key}") };
        let quantile = quantile.ok_or_else(|| missing("calibration.quantile"))?;
        check_quantile(quantile)?;
        let class_cuts = CUE_CLASSES
            .iter()
            .zip(cuts)
            .map(|(&class, cut)| {
                let cut = cut.ok_or_else(|| missing(&format!("class_cut.{class}")))?;
                Ok(ClassCut { class, cut, direction: directions.get(class) })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FlagThresholds {
            sentiment_abs_cut: sentiment.ok_or_else(|| missing("sentiment_abs_cut"))?,
            simplicity_cut: simplicity.ok_or_else(|| missing("simplicity_cut"))?,
            class_cuts,
            meta: CalibrationMeta { source: source.unwrap_or_default(), quantile },
        })
    }
}

impl FlagThresholds {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        std::fs::read_to_string(path)?.parse()
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_string())?;
        Ok(())
    }

    pub fn class_cut(&self, class: WordClass) -> Option<&ClassCut> {
        self.class_cuts.iter().find(|c| c.class == class)
    }
}
