//! Labelled headline datasets in CSV (`id,text,label[,tags]`) or JSON lines
//! (same field names).

use std::collections::HashSet;
use std::fmt;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::RawText;

/// Fact-check rating, ordered from least to most truthful.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TruthLabel {
    PantsOnFire,
    False,
    BarelyTrue,
    HalfTrue,
    MostlyTrue,
    True,
}

impl TruthLabel {
    pub const ALL: [TruthLabel; 6] = [
        TruthLabel::PantsOnFire,
        TruthLabel::False,
        TruthLabel::BarelyTrue,
        TruthLabel::HalfTrue,
        TruthLabel::MostlyTrue,
        TruthLabel::True,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TruthLabel::PantsOnFire => "pants_on_fire",
            TruthLabel::False => "false",
            TruthLabel::BarelyTrue => "barely_true",
            TruthLabel::HalfTrue => "half_true",
            TruthLabel::MostlyTrue => "mostly_true",
            TruthLabel::True => "true",
        }
    }

    /// Column header form used in rendered tables.
    pub fn display_name(self) -> &'static str {
        match self {
            TruthLabel::PantsOnFire => "Pants on Fire",
            TruthLabel::False => "False",
            TruthLabel::BarelyTrue => "Barely True",
            TruthLabel::HalfTrue => "Half True",
            TruthLabel::MostlyTrue => "Mostly True",
            TruthLabel::True => "True",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for TruthLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TruthLabel {
    type Err = Error;

    /// Case-insensitive; spaces, hyphens and underscores are interchangeable.
    fn from_str(s: &str) -> Result<Self> {
        let normalized: String = s
            .trim()
            .split(|c: char| c.is_whitespace() || c == '-' || c == '_')
            .filter(|p| !p.is_empty())
            .collect::<Vec<_>>()
            .join("_")
            .to_lowercase();
        TruthLabel::ALL
            .into_iter()
            .find(|l| l.as_str() == normalized)
            .ok_or_else(|| Error::UnknownLabel { line: 0, label: s.to_owned() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeadlineRecord {
    pub id: String,
    pub text: RawText,
    pub label: Option<TruthLabel>,
    /// Space-separated tags aligned with the word/numeric tokens.
    pub pretags: Option<String>,
}

impl HeadlineRecord {
    pub fn new(id: impl Into<String>, text: &str, label: Option<TruthLabel>) -> Result<Self> {
        let id = id.into();
        let text = RawText::new(text).map_err(|e| e.for_record(&id))?;
        Ok(HeadlineRecord { id, text, label, pretags: None })
    }

    pub fn with_pretags(mut self, tags: impl Into<String>) -> Self {
        self.pretags = Some(tags.into());
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DatasetFormat {
    Csv,
    Jsonl,
}

impl DatasetFormat {
    /// Guesses from the file extension, defaulting to CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("jsonl" | "ndjson" | "json") => DatasetFormat::Jsonl,
            _ => DatasetFormat::Csv,
        }
    }
}

impl FromStr for DatasetFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(DatasetFormat::Csv),
            "jsonl" => Ok(DatasetFormat::Jsonl),
            other => Err(Error::InvalidArgument(format!("unknown dataset format {other:?}"))),
        }
    }
}

/// Record counts per label, in label order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IngestReport {
    pub counts: [usize; 6],
    pub unlabeled: usize,
    pub total: usize,
}

impl IngestReport {
    pub fn count(&self, label: TruthLabel) -> usize {
        self.counts[label.index()]
    }
}

impl fmt::Display for IngestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for label in TruthLabel::ALL {
            writeln!(f, "{}: {}", label, self.count(label))?;
        }
        if self.unlabeled > 0 {
            writeln!(f, "unlabeled: {}", self.unlabeled)?;
        }
        write!(f, "total: {}", self.total)
    }
}

#[derive(Debug, Clone)]
pub struct Dataset {
    pub records: Vec<HeadlineRecord>,
    pub report: IngestReport,
}

#[derive(Debug, Deserialize)]
struct RawRecord {
    id: String,
    text: String,
    #[serde(default)]
    label: Option<String>,
    #[serde(default)]
    tags: Option<String>,
}

pub fn ingest(path: impl AsRef<Path>, format: DatasetFormat) -> Result<Dataset> {
    let file = std::fs::File::open(path)?;
    ingest_reader(file, format)
}

pub fn ingest_reader(reader: impl Read, format: DatasetFormat) -> Result<Dataset> {
    let raw = match format {
        DatasetFormat::Csv => read_csv(reader)?,
        DatasetFormat::Jsonl => read_jsonl(reader)?,
    };
    if raw.is_empty() {
        return Err(Error::ParseError { line: 0, message: "dataset contains no records".into() });
    }

    let mut seen = HashSet::new();
    let mut records = Vec::with_capacity(raw.len());
    let mut report = IngestReport::default();
    for (line, r) in raw {
        if !seen.insert(r.id.clone()) {
            return Err(Error::DuplicateId(r.id));
        }
        let label = match r.label.as_deref().map(str::trim) {
            None | Some("") => None,
            Some(s) => Some(s.parse::<TruthLabel>().map_err(|_| Error::UnknownLabel { line, label: s.to_owned() })?),
        };
        let text = RawText::new(r.text).map_err(|e| e.for_record(&r.id))?;
        match label {
            Some(l) => report.counts[l.index()] += 1,
            None => report.unlabeled += 1,
        }
        let pretags = r.tags.filter(|t| !t.trim().is_empty());
        records.push(HeadlineRecord { id: r.id, text, label, pretags });
    }
    report.total = records.len();
    Ok(Dataset { records, report })
}

fn read_csv(reader: impl Read) -> Result<Vec<(u64, RawRecord)>> {
    let mut csv = csv::ReaderBuilder::new().trim(csv::Trim::Headers).from_reader(reader);
    let headers = csv.headers().map_err(|e| csv_error(&e))?.clone();
    if headers.is_empty() {
        return Err(Error::ParseError { line: 0, message: "empty input".into() });
    }
    for required in ["id", "text"] {
        if !headers.iter().any(|h| h == required) {
            return Err(Error::ParseError { line: 1, message: format!("missing column {required:?}") });
        }
    }
    let mut out = Vec::new();
    for result in csv.records() {
        let row = result.map_err(|e| csv_error(&e))?;
        let line = row.position().map(|p| p.line()).unwrap_or(0);
        let record: RawRecord =
            row.deserialize(Some(&headers)).map_err(|e| Error::ParseError { line, message: e.to_string() })?;
        out.push((line, record));
    }
    Ok(out)
}

fn csv_error(e: &csv::Error) -> Error {
    let line = e.position().map(|p| p.line()).unwrap_or(0);
    Error::ParseError { line, message: e.to_string() }
}

fn read_jsonl(reader: impl Read) -> Result<Vec<(u64, RawRecord)>> {
    let mut out = Vec::new();
    for (idx, line) in BufReader::new(reader).lines().enumerate() {
        let line_no = idx as u64 + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record: RawRecord =
            serde_json::from_str(&line).map_err(|e| Error::ParseError { line: line_no, message: e.to_string() })?;
        out.push((line_no, record));
    }
    Ok(out)
}

/// Writes records as CSV with the `id,text,label,tags` header.
pub fn write_csv<W: std::io::Write>(records: &[HeadlineRecord], writer: W) -> Result<()> {
    let mut csv = csv::Writer::from_writer(writer);
    csv.write_record(["id", "text", "label", "tags"]).map_err(|e| csv_error(&e))?;
    for r in records {
        csv.write_record([
            r.id.as_str(),
            r.text.as_str(),
            r.label.map(TruthLabel::as_str).unwrap_or(""),
            r.pretags.as_deref().unwrap_or(""),
        ])
        .map_err(|e| csv_error(&e))?;
    }
    csv.flush()?;
    Ok(())
}
