//! Headline metrics along three dimensions (lexical structure, simplicity,
//! emotion), Tukey-Kramer validation of how well each metric separates truth
//! categories, and a three-cue headline flagger.
//!
//! The metric modules ([`text`], [`lexicon`], [`readability`], [`pos`]) are
//! pure functions over tokenized text. [`stats`] holds the studentized range
//! distribution and pairwise tests, and [`pipeline`] wires everything into
//! dataset-level operations used by the `lesie` command line tool.

pub mod error;
pub mod lexicon;
pub mod parallel;
pub mod pipeline;
pub mod pos;
pub mod readability;
pub mod stats;
pub mod text;

pub use error::{Error, Result};
