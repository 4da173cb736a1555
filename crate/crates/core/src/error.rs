use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Quadrature or sampling could not certify the requested accuracy
    /// within its refinement budget.
    #[error("requested accuracy {requested:e} not reached; best estimate {achieved:e}")]
    Accuracy { requested: f64, achieved: f64 },

    #[error("matrix is not positive definite")]
    NotPositiveDefinite,

    #[error(
        "eigensolver did not converge after {iterations} iterations \
         (estimate {estimate:e}, residual {residual:e})"
    )]
    NoConvergence {
        iterations: usize,
        estimate: f64,
        residual: f64,
    },

    #[error("numerical check failed: {0}")]
    Numerical(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
