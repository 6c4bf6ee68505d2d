use thiserror::Error;

/// Domain errors raised by the exact and numeric kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// An exact division left a nonzero remainder.
    #[error("exact division failed: {0}")]
    NonDivisible(String),

    #[error("pole encountered: {0}")]
    PoleEncountered(String),

    #[error("parameters outside the convergence region: {0}")]
    ConvergenceViolation(String),

    #[error("truncation depth too small: {0}")]
    DepthTooSmall(String),

    /// Two independent evaluation routes disagreed.
    #[error("route mismatch: {0}")]
    RouteMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
