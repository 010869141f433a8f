//! Coleman-Liau index and the letters-per-word headline reduction.
//!
//! ```text
//! CLI = 0.0588 L - 0.296 S - 15.8
//! L   = letters per 100 words
//! S   = sentences per 100 words
//! ```
//!
//! For a single-sentence headline the `S` term and the constant are a common
//! shift, so letters per word orders headlines exactly as the full index does.

use crate::error::Result;
use crate::text::{count_letters, count_words, TokenizedText};

pub const CLI_LETTER_WEIGHT: f64 = 0.0588;
pub const CLI_SENTENCE_WEIGHT: f64 = 0.296;
pub const CLI_INTERCEPT: f64 = 15.8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReadabilityResult {
    pub cli_full: f64,
    pub letters_per_word: f64,
    /// Letters per 100 words.
    pub letters_per_100: f64,
    /// Sentences per 100 words.
    pub sentences_per_100: f64,
}

impl ReadabilityResult {
    pub fn from_counts(letters: usize, words: usize, sentences: usize) -> Self {
        let words = words as f64;
        let letters_per_word = letters as f64 / words;
        let letters_per_100 = 100.0 * letters_per_word;
        let sentences_per_100 = 100.0 * sentences as f64 / words;
        ReadabilityResult {
            cli_full: CLI_LETTER_WEIGHT * letters_per_100 - CLI_SENTENCE_WEIGHT * sentences_per_100 - CLI_INTERCEPT,
            letters_per_word,
            letters_per_100,
            sentences_per_100,
        }
    }
}

pub fn coleman_liau(text: &TokenizedText) -> Result<ReadabilityResult> {
    let words = count_words(text)?;
    Ok(ReadabilityResult::from_counts(count_letters(text), words, text.sentence_count()))
}

/// Letters per word, the headline simplicity metric. Numerals count as
/// words with zero letters.
pub fn headline_simplicity(text: &TokenizedText) -> Result<f64> {
    let (letters, words) = simplicity_ratio(text)?;
    Ok(letters as f64 / words as f64)
}

/// The `(letters, words)` pair behind [`headline_simplicity`].
pub fn simplicity_ratio(text: &TokenizedText) -> Result<(usize, usize)> {
    let words = count_words(text)?;
    Ok((count_letters(text), words))
}
