use std::io::Write;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::stats::PairwiseMatrix;

use super::dataset::TruthLabel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Markdown,
    Csv,
}

impl ReportFormat {
    pub fn extension(self) -> &'static str {
        match self {
            ReportFormat::Markdown => "md",
            ReportFormat::Csv => "csv",
        }
    }
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::InvalidArgument(format!("unknown report format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportOptions {
    /// Significance levels used for markdown annotations.
    pub alpha_grid: Vec<f64>,
    /// Write p-values in CSV with 17 significant digits instead of 3 decimals.
    pub full_precision: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { alpha_grid: vec![0.01, 0.05, 0.10], full_precision: false }
    }
}

/// Parses a comma separated list of levels such as `0.01,0.05,0.10`.
pub fn parse_alpha_grid(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| match p.parse::<f64>() {
            Ok(a) if a > 0.0 && a < 1.0 => Ok(a),
            _ => Err(Error::InvalidArgument(format!("alpha level must lie in (0, 1), got {p:?}"))),
        })
        .collect()
}

pub const CSV_HEADER: &str = "metric,row,column,p_value";

fn display_label(label: &str) -> &str {
    label.parse::<TruthLabel>().map(TruthLabel::display_name).unwrap_or(label)
}

fn fixed(p: f64) -> String {
    format!("{p:.3}")
}

pub fn render_report<W: Write>(
    matrices: &[PairwiseMatrix],
    format: ReportFormat,
    options: &ReportOptions,
    mut sink: W,
) -> Result<()> {
    let text = match format {
        ReportFormat::Markdown => render_markdown(matrices, options),
        ReportFormat::Csv => render_csv(matrices, options),
    };
    sink.write_all(text.as_bytes())?;
    sink.flush()?;
    Ok(())
}

/// Long format: one line per matrix cell, diagonal included.
pub fn render_csv(matrices: &[PairwiseMatrix], options: &ReportOptions) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    for m in matrices {
        for (i, row) in m.labels.iter().enumerate() {
            for (j, column) in m.labels.iter().enumerate() {
                let p = m.p[i][j];
                let value = if options.full_precision { format!("{p:.16e}") } else { fixed(p) };
                out.push_str(&format!("{},{row},{column},{value}\n", csv_field(&m.metric_name)));
            }
        }
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

pub fn render_markdown(matrices: &[PairwiseMatrix], options: &ReportOptions) -> String {
    let mut out = String::from("# Tukey pairwise p-values\n");
    for m in matrices {
        out.push_str(&format!("\n## {}\n\n", m.metric_name));
        out.push('|');
        for label in &m.labels {
            out.push_str(&format!(" | {}", display_label(label)));
        }
        out.push_str(" |\n|---");
        out.push_str(&"|---:".repeat(m.k()));
        out.push_str("|\n");
        for (i, label) in m.labels.iter().enumerate() {
            out.push_str(&format!("| {}", display_label(label)));
            for p in &m.p[i] {
                out.push_str(&format!(" | {}", fixed(*p)));
            }
            out.push_str(" |\n");
        }
        let notes = annotations(m, &options.alpha_grid);
        if !notes.is_empty() {
            out.push('\n');
            for note in notes {
                out.push_str(&format!("- {note}\n"));
            }
        }
    }
    out
}

fn annotations(m: &PairwiseMatrix, alpha_grid: &[f64]) -> Vec<String> {
    let mut notes = Vec::new();
    let k = m.k();
    let total = k * k.saturating_sub(1) / 2;
    for &alpha in alpha_grid {
        let significant =
            (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| m.p[i][j] < alpha).count();
        notes.push(format!("α = {alpha}: {significant} of {total} pairs differ"));
    }

    let pof = TruthLabel::PantsOnFire.as_str();
    if let Some(i) = m.labels.iter().position(|l| l == pof) {
        let largest = (0..k).filter(|&j| j != i).map(|j| m.p[i][j]).fold(0.0, f64::max);
        let levels: Vec<String> = alpha_grid.iter().filter(|&&a| k > 1 && largest < a).map(|a| a.to_string()).collect();
        if !levels.is_empty() {
            notes.push(format!(
                "{} differs from every other category at α = {}",
                TruthLabel::PantsOnFire.display_name(),
                levels.join(", ")
            ));
        }
    }

    for w in &m.warnings {
        notes.push(format!(
            "zero pooled variance: {} vs {} reported as p = 0",
            display_label(&w.first),
            display_label(&w.second)
        ));
    }
    notes
}
