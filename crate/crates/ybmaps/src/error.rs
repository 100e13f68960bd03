use thiserror::Error;

/// Errors produced by map evaluation, matrix algebra and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YbError {
    /// A denominator or pairing vanished at the given input.
    #[error("singular input: {0}")]
    Singular(String),

    #[error("kind mismatch: expected {expected} site, got {got}")]
    KindMismatch { expected: String, got: String },

    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("matrix dimension {dim} exceeds supported bound {bound}")]
    DimensionBound { dim: usize, bound: usize },

    #[error("not factorizable: {0}")]
    NotFactorizable(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, YbError>;
