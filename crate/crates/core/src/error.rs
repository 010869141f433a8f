use std::io;

/// Errors produced anywhere in the metric, statistics and pipeline layers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("text is empty after trimming whitespace")]
    EmptyText,

    #[error("text contains no word or numeric tokens")]
    NoWords,

    #[error("malformed lexicon at line {line}: {reason}")]
    MalformedLexicon { line: usize, reason: String },

    #[error("lexicon entry {word:?} appears in both polarities")]
    ConflictingEntry { word: String },

    #[error("pretagged input has {found} tags for {expected} word/numeric tokens")]
    TagCountMismatch { expected: usize, found: usize },

    #[error("unknown part-of-speech tag {0:?}")]
    UnknownTag(String),

    #[error("group {label:?} has {n} values; at least 2 are required")]
    DegenerateGroup { label: String, n: usize },

    #[error("at least 2 groups are required, got {0}")]
    TooFewGroups(usize),

    #[error("group {0:?} appears more than once")]
    DuplicateGroup(String),

    #[error("non-finite value in group {0:?}")]
    NonFiniteValue(String),

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("parse error at line {line}: {message}")]
    ParseError { line: u64, message: String },

    #[error("unknown truth label {label:?} at line {line}")]
    UnknownLabel { line: u64, label: String },

    #[error("duplicate record id {0:?}")]
    DuplicateId(String),

    #[error("no records carry the label {0:?}")]
    MissingLabel(String),

    #[error("record {id:?}: {source}")]
    Record {
        id: String,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    /// Attaches a record id to an error raised while processing that record.
    pub fn for_record(self, id: &str) -> Error {
        Error::Record { id: id.to_owned(), source: Box::new(self) }
    }

    /// The innermost error, looking through record context.
    pub fn root(&self) -> &Error {
        match self {
            Error::Record { source, .. } => source.root(),
            other => other,
        }
    }

    pub fn is_numerical(&self) -> bool {
        matches!(self.root(), Error::NumericalFailure(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
