use std::io::Write;

use crate::error::{Error, Result};
use crate::lexicon::{score_sentiment, PolarityLexicon};
use crate::parallel::Execution;
use crate::pos::{tag, word_class_proportions, Tagger, WordClassProportions};
use crate::readability::headline_simplicity;
use crate::text::tokenize_raw;

use super::dataset::HeadlineRecord;

/// The three metric families for one headline.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureRow {
    pub id: String,
    /// Sentiment value per lexicon, in lexicon configuration order.
    pub sentiment: Vec<(String, f64)>,
    /// Letters per word.
    pub simplicity: f64,
    pub classes: WordClassProportions,
}

impl FeatureRow {
    pub fn sentiment_for(&self, lexicon: &str) -> Option<f64> {
        self.sentiment.iter().find(|(name, _)| name == lexicon).map(|(_, v)| *v)
    }

    /// Largest absolute sentiment across lexicons.
    pub fn max_abs_sentiment(&self) -> f64 {
        self.sentiment.iter().map(|(_, v)| v.abs()).fold(0.0, f64::max)
    }
}

/// Lexicons, tagger and execution mode for turning records into feature rows.
#[derive(Debug, Clone)]
pub struct FeatureExtractor {
    pub lexicons: Vec<PolarityLexicon>,
    pub tagger: Tagger,
    pub execution: Execution,
}

impl FeatureExtractor {
    pub fn new(lexicons: Vec<PolarityLexicon>, tagger: Tagger) -> Self {
        FeatureExtractor { lexicons, tagger, execution: Execution::default() }
    }

    /// The bundled LM and generic lexicons with the given tagger.
    pub fn bundled(tagger: Tagger) -> Self {
        Self::new(vec![PolarityLexicon::bundled_lm(), PolarityLexicon::bundled_generic()], tagger)
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn lexicon_names(&self) -> Vec<&str> {
        self.lexicons.iter().map(PolarityLexicon::name).collect()
    }

    pub fn row(&self, record: &HeadlineRecord) -> Result<FeatureRow> {
        self.compute_row(record).map_err(|e| e.for_record(&record.id))
    }

    fn compute_row(&self, record: &HeadlineRecord) -> Result<FeatureRow> {
        let text = tokenize_raw(record.text.clone());
        let sentiment = self
            .lexicons
            .iter()
            .map(|lex| Ok((lex.name().to_owned(), score_sentiment(&text, lex)?.value)))
            .collect::<Result<Vec<_>>>()?;
        let simplicity = headline_simplicity(&text)?;
        let tagged = tag(&text, self.tagger, record.pretags.as_deref())?;
        Ok(FeatureRow { id: record.id.clone(), sentiment, simplicity, classes: word_class_proportions(&tagged) })
    }

    /// One row per record, in record order.
    pub fn extract(&self, records: &[HeadlineRecord]) -> Result<Vec<FeatureRow>> {
        self.execution.try_map(records, |r| self.row(r))
    }
}

pub fn extract_features(
    records: &[HeadlineRecord],
    lexicons: &[PolarityLexicon],
    tagger: Tagger,
) -> Result<Vec<FeatureRow>> {
    FeatureExtractor::new(lexicons.to_vec(), tagger).extract(records)
}

/// Writes feature rows as CSV: `id,sentiment.<lexicon>...,simplicity,verb,adjective,modal,name,number`.
pub fn write_features_csv<W: Write>(rows: &[FeatureRow], lexicons: &[&str], writer: W) -> Result<()> {
    let mut csv = csv::Writer::from_writer(writer);
    let mut header = vec!["id".to_owned()];
    header.extend(lexicons.iter().map(|l| format!("sentiment.{l}")));
    header.extend(["simplicity", "verb", "adjective", "modal", "name", "number"].map(String::from));
    csv.write_record(&header).map_err(to_io)?;
    for row in rows {
        let mut fields = vec![row.id.clone()];
        for name in lexicons {
            let value = row
                .sentiment_for(name)
                .ok_or_else(|| Error::InvalidArgument(format!("row {} has no sentiment for lexicon {name}", row.id)))?;
            fields.push(value.to_string());
        }
        let c = &row.classes;
        fields.extend([row.simplicity, c.verb, c.adjective, c.modal, c.name, c.number].map(|v| v.to_string()));
        csv.write_record(&fields).map_err(to_io)?;
    }
    csv.flush()?;
    Ok(())
}

fn to_io(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e.to_string()))
}
