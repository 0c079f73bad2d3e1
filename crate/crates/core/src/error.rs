use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failures of function evaluations, quadrature and verification inputs.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole at x = {0}")]
    Pole(f64),
    #[error("{0}")]
    Domain(String),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("no convergence: {0}")]
    Convergence(String),
    #[error("out of range: {0}")]
    Range(String),
    #[error("singular point: {0}")]
    Singularity(String),
    #[error("tolerance not met: error estimate {estimate:e} exceeds {requested:e} after {panels} panels")]
    ToleranceNotMet {
        estimate: f64,
        requested: f64,
        panels: usize,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by arguments outside an operation's domain.
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Pole(_) | Error::Domain(_) | Error::Range(_))
    }
}
