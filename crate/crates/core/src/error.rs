use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("exponent vectors of a monomial ideal must be nonnegative (got {0:?})")]
    NegativeExponent(Vec<i64>),

    #[error("operation requires a proper ideal, got the unit ideal")]
    UnitIdeal,

    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,

    #[error("operation requires a square-free ideal")]
    NotSquareFree,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("field characteristic must be 0 or a prime, got {0}")]
    InvalidCharacteristic(u64),

    #[error("resource cap exceeded: {what} needs {required}, cap is {cap}")]
    ResourceCap {
        what: &'static str,
        required: u128,
        cap: u128,
    },

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
