use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole of {function} at {at}")]
    Pole { function: &'static str, at: Complex64 },
    #[error("parameter c = {c} is a non-positive integer")]
    ParameterPole { c: Complex64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("tolerance not met: estimate {estimate}, error bound {error_bound}")]
    ToleranceNotMet { estimate: Complex64, error_bound: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("singular point: {0}")]
    SingularPoint(String),
    #[error("k = {k} is below |n| = {n_abs}; no pole")]
    NotAPole { k: u32, n_abs: u32 },
    #[error("ill-conditioned: {0}")]
    IllConditioned(String),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::InvalidInput(e.to_string())
    }
}
