//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by corpus ingestion, training, decoding and evaluation.
#[derive(Debug, Error)]
pub enum Error {
    /// Empty or whitespace-only page title.
    #[error("invalid title: empty or whitespace-only")]
    InvalidTitle,

    /// Malformed input file content.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A page id occurred twice in a page corpus.
    #[error("duplicate page id {page_id:?} at line {line}")]
    DuplicatePage { line: usize, page_id: String },

    /// BIO violation rejected in strict mode.
    #[error("BIO violation at line {line}: {message}")]
    Bio { line: usize, message: String },

    /// Spans overlap where they must not.
    #[error("overlapping spans: [{0}, {1}) and [{2}, {3})")]
    Overlap(usize, usize, usize, usize),

    /// Training data has fewer than two distinct labels.
    #[error("degenerate training data: {0}")]
    DegenerateTraining(String),

    /// A feature value is NaN or infinite.
    #[error("non-finite value {value} for feature {name:?}")]
    InvalidFeature { name: String, value: f64 },

    /// Loss/gradient requested for an empty batch.
    #[error("empty batch")]
    EmptyBatch,

    /// A link record points at a page that is not in the corpus.
    #[error("link refers to unknown page id {page_id:?}")]
    DanglingLink { page_id: String },

    /// A parameter is outside its documented range.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A token position is outside the sentence.
    #[error("position {position} out of range for sentence of length {len}")]
    OutOfRange { position: usize, len: usize },

    /// Gold and predicted inputs do not line up sentence-by-sentence.
    #[error("misaligned inputs: {0}")]
    Alignment(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
