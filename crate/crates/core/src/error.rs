use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("exponent overflow in monomial arithmetic")]
    ExponentOverflow,

    #[error("Chebyshev index {index} exceeds the configured bound {bound}")]
    IndexOutOfRange { index: i64, bound: i64 },

    #[error("parameter out of range: {0}")]
    Domain(String),

    #[error("zero polynomial is not a valid input to {0}")]
    ZeroPolynomial(&'static str),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("could not sample an invertible matrix after {0} attempts")]
    SamplingFailed(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
