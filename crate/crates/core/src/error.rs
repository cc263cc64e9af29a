use thiserror::Error;

/// Errors raised by the algebra kernel and its front ends.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: {0}")]
    Pole(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("{0} is not contained in {1}")]
    NotContained(String, String),
    #[error("{0} is not a strip of the requested kind")]
    NotAStrip(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("input is not symmetric")]
    NotSymmetric,
    #[error("series is not invertible under composition")]
    NonInvertible,
    #[error("incomplete basis: {0}")]
    IncompleteBasis(String),
    #[error("sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
