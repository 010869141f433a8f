//! Polarity word lists and dictionary-ratio sentiment scoring.
//!
//! File format (UTF-8): one entry per line, `[positive]` / `[negative]`
//! headers switch the target set, `#` starts a comment, blank lines are
//! ignored. [`PolarityLexicon::dump`] writes the canonical form, which loads
//! back to an identical lexicon and dumps to identical bytes.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::text::{count_words, TokenKind, TokenizedText};

const BUNDLED_LM: &str = include_str!("../data/lexicon_lm.txt");
const BUNDLED_GENERIC: &str = include_str!("../data/lexicon_generic.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarityLexicon {
    name: String,
    positive: BTreeSet<String>,
    negative: BTreeSet<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Section {
    Positive,
    Negative,
}

impl PolarityLexicon {
    /// Builds a lexicon from word lists, applying the same validation as the loader.
    pub fn from_words<P, N, S>(name: &str, positive: P, negative: N) -> Result<Self>
    where
        P: IntoIterator<Item = S>,
        N: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut lexicon =
            PolarityLexicon { name: name.to_owned(), positive: BTreeSet::new(), negative: BTreeSet::new() };
        for word in positive {
            lexicon.insert(Section::Positive, word.as_ref(), 0)?;
        }
        for word in negative {
            lexicon.insert(Section::Negative, word.as_ref(), 0)?;
        }
        lexicon.finish()
    }

    pub fn parse(source: &str, name: &str) -> Result<Self> {
        let mut lexicon =
            PolarityLexicon { name: name.to_owned(), positive: BTreeSet::new(), negative: BTreeSet::new() };
        let mut section = None;
        for (idx, raw) in source.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if line.starts_with('[') {
                section = Some(match line {
                    "[positive]" => Section::Positive,
                    "[negative]" => Section::Negative,
                    other => {
                        return Err(Error::MalformedLexicon {
                            line: line_no,
                            reason: format!("unknown section header {other}"),
                        })
                    }
                });
                continue;
            }
            let Some(section) = section else {
                return Err(Error::MalformedLexicon {
                    line: line_no,
                    reason: "entry before any [positive]/[negative] header".into(),
                });
            };
            lexicon.insert(section, line, line_no)?;
        }
        lexicon.finish()
    }

    pub fn load(path: impl AsRef<Path>, name: &str) -> Result<Self> {
        let source = std::fs::read_to_string(path)?;
        Self::parse(&source, name)
    }

    /// Finance-oriented list in the Loughran-McDonald style.
    pub fn bundled_lm() -> Self {
        Self::parse(BUNDLED_LM, "LM").expect("bundled LM lexicon is valid")
    }

    /// Small general-purpose list.
    pub fn bundled_generic() -> Self {
        Self::parse(BUNDLED_GENERIC, "GENERIC").expect("bundled generic lexicon is valid")
    }

    fn insert(&mut self, section: Section, entry: &str, line: usize) -> Result<()> {
        let word = entry.trim();
        if word.is_empty() {
            return Err(Error::MalformedLexicon { line, reason: "empty entry".into() });
        }
        if word.chars().any(char::is_whitespace) {
            return Err(Error::MalformedLexicon { line, reason: format!("multi-word entry {word:?}") });
        }
        let word = word.to_lowercase();
        let (target, other) = match section {
            Section::Positive => (&mut self.positive, &self.negative),
            Section::Negative => (&mut self.negative, &self.positive),
        };
        if other.contains(&word) {
            return Err(Error::ConflictingEntry { word });
        }
        target.insert(word);
        Ok(())
    }

    fn finish(self) -> Result<Self> {
        if self.positive.is_empty() && self.negative.is_empty() {
            return Err(Error::MalformedLexicon { line: 0, reason: "lexicon has no entries".into() });
        }
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn positive(&self) -> &BTreeSet<String> {
        &self.positive
    }

    pub fn negative(&self) -> &BTreeSet<String> {
        &self.negative
    }

    /// The same lexicon with its polarities exchanged.
    pub fn swapped(&self) -> Self {
        PolarityLexicon { name: self.name.clone(), positive: self.negative.clone(), negative: self.positive.clone() }
    }

    /// Canonical text form: a name comment, then both sections with sorted entries.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# lexicon: {}", self.name);
        out.push_str("[positive]\n");
        for word in &self.positive {
            out.push_str(word);
            out.push('\n');
        }
        out.push_str("[negative]\n");
        for word in &self.negative {
            out.push_str(word);
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SentimentScore {
    /// `(positive_hits - negative_hits) / token_count`, in `[-1, 1]`.
    pub value: f64,
    pub positive_hits: usize,
    pub negative_hits: usize,
    pub token_count: usize,
}

/// Case-insensitive exact-token matching of word tokens; numeric tokens count
/// toward the denominator but never match.
pub fn score_sentiment(text: &TokenizedText, lexicon: &PolarityLexicon) -> Result<SentimentScore> {
    let token_count = count_words(text)?;
    let mut positive_hits = 0;
    let mut negative_hits = 0;
    for token in text.tokens().iter().filter(|t| t.kind == TokenKind::Word) {
        let word = token.surface.to_lowercase();
        if lexicon.positive.contains(&word) {
            positive_hits += 1;
        } else if lexicon.negative.contains(&word) {
            negative_hits += 1;
        }
    }
    let value = (positive_hits as f64 - negative_hits as f64) / token_count as f64;
    Ok(SentimentScore { value, positive_hits, negative_hits, token_count })
}
