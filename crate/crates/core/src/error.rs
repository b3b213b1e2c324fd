use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("empty truncation window: cutoff {cutoff} leaves no coefficients once the clearing polynomial of degree {degree} is accounted for")]
    EmptyWindow { cutoff: i32, degree: i32 },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand for validation failures on `N`, cutoffs and similar knobs.
pub fn config(msg: impl Into<String>) -> Error {
    Error::Config(msg.into())
}
