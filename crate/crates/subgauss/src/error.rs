//! Error type shared across the library.

use std::fmt;

/// Errors produced by distribution construction, evaluation and solving.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A distribution parameter is outside its admissible domain.
    InvalidParameter {
        family: &'static str,
        field: &'static str,
        message: String,
    },
    /// The distribution is (numerically) a point mass, so the optimal proxy
    /// variance problem is degenerate.
    Degenerate { message: String },
    /// A series or quadrature evaluation failed to reach its accuracy budget.
    Eval { message: String },
    /// An iterative solver exhausted its iteration budget.
    NonConvergence { message: String },
    /// The requested operation is not available for this distribution.
    Unsupported { message: String },
    /// A caller-side precondition was violated.
    Precondition { message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter {
                family,
                field,
                message,
            } => {
                write!(f, "invalid parameter `{field}` for family `{family}`: {message}")
            }
            Error::Degenerate { message } => write!(f, "degenerate distribution: {message}"),
            Error::Eval { message } => write!(f, "evaluation error: {message}"),
            Error::NonConvergence { message } => write!(f, "no convergence: {message}"),
            Error::Unsupported { message } => write!(f, "unsupported operation: {message}"),
            Error::Precondition { message } => write!(f, "precondition violated: {message}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
