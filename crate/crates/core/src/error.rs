use thiserror::Error;

/// Errors produced by the geometry kernel.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unsupported input: {0}")]
    UnsupportedInput(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
