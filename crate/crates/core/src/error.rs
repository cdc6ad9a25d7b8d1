use thiserror::Error;

/// Errors raised by the library. Every variant maps onto one CLI exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse rational from {0:?}")]
    Parse(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    /// The requested quantity has a pole at the given parameter.
    #[error("pole: {0}")]
    Pole(String),

    /// A truncated series does not carry enough coefficients for the request.
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    #[error("reciprocal of a series that vanishes on its whole window")]
    DivisionByZeroSeries,

    /// Two computation paths that must agree did not. Signals a bug.
    #[error("consistency error: {0}")]
    Consistency(String),
}

impl Error {
    /// Stable machine-readable name used in CLI output records.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::DivisionByZero => "division_by_zero",
            Error::Domain(_) => "domain",
            Error::Pole(_) => "pole",
            Error::PrecisionExhausted(_) => "precision_exhausted",
            Error::DivisionByZeroSeries => "division_by_zero_series",
            Error::Consistency(_) => "consistency",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
