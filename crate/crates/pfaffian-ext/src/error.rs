use thiserror::Error;

/// Errors produced by the library.
///
/// `Parse` is reserved for failures to read external input (ideal specs,
/// partitions, degree windows); everything else is a domain violation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid dominant weight: {0}")]
    InvalidWeight(String),
    #[error("invalid matrix size: {0}")]
    InvalidContext(String),
    #[error("invalid subquotient label: {0}")]
    InvalidLabel(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("{0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
