use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Error, Debug)]
pub enum Error {
    #[error("matrix is empty")]
    EmptyMatrix,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("dense SVD limit exceeded ({rows}x{cols} > {limit}): use sketched path")]
    DenseLimitExceeded { rows: usize, cols: usize, limit: usize },

    #[error("basis is not orthonormal (max deviation {max_dev:e})")]
    NonOrthonormal { max_dev: f64 },

    #[error("inconsistent tail norm: got {value:e} for total {total:e}")]
    InconsistentTailNorm { value: f64, total: f64 },

    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("all sampling scores are zero")]
    ZeroScores,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter { name, reason: reason.into() }
    }
}
