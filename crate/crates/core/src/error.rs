use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Input data fails a structural invariant (bad polygon, bad samples, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A formula was evaluated outside its mathematical domain.
    #[error("domain error: {0}")]
    DomainError(String),

    /// An operation requires a scale parameter above an explicit threshold.
    #[error("threshold violated: {name} requires {required}, got {actual}")]
    Threshold {
        name: &'static str,
        required: f64,
        actual: f64,
    },

    /// Sampling or grid resolution is too coarse for a stable result.
    #[error("resolution too coarse: {0}")]
    Resolution(String),

    /// An iterative solver exhausted its iteration budget.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// Index past the end of a spectrum or side list.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// A least-squares fit cannot be trusted.
    #[error("ill-conditioned fit: {0}")]
    IllConditioned(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
