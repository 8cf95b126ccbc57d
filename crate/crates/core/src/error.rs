use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground-size mismatch: {0} vs {1}")]
    GroundSizeMismatch(usize, usize),
    #[error("{0} does not refine {1}")]
    NotComparable(String, String),
    #[error("weight mismatch: {0} vs {1}")]
    WeightMismatch(String, String),
    #[error("subset element {element} outside [1, {max}]")]
    SubsetOutOfRange { element: usize, max: usize },
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("invalid degree cap {0} (allowed range 1..=14)")]
    InvalidDegreeCap(usize),
    #[error("function is not homogeneous of degree {0}")]
    NotHomogeneous(usize),
    #[error("quasi-symmetric function is not symmetric")]
    NotSymmetric,
    #[error("series is not invertible: constant term must be 1")]
    NotInvertible,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("variable names differ: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("size limit exceeded: {0}")]
    TooLarge(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid json: {0}")]
    Json(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
