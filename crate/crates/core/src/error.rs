//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed input file; `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("empty dataset vocabulary")]
    EmptyDatasetVocab,

    #[error("empty training corpus")]
    EmptyCorpus,

    #[error("no trainable tokens")]
    NoTrainableTokens,

    #[error("degenerate labels: training data contains a single class")]
    DegenerateLabels,

    #[error("degenerate marginals")]
    DegenerateMarginals,

    #[error("length mismatch: {0}")]
    LengthMismatch(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("model file error: {0}")]
    ModelFormat(String),

    #[error("stratification infeasible: {0}")]
    Stratification(String),

    #[error("classifier {0} requires embeddings")]
    MissingEmbeddings(&'static str),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
