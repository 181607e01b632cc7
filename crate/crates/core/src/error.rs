use thiserror::Error;

/// Errors raised by the algebra, the matrix engine and the oracle.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum IfmError {
    #[error("component {name} = {value} is outside [0, 1]")]
    OutOfRange { name: &'static str, value: f64 },

    #[error("mu + nu = {sum} exceeds 1")]
    SumViolation { sum: f64 },

    #[error("p must be nonzero")]
    ZeroP,

    #[error("lambda = {0} is outside [0, 1]")]
    InvalidLambda(f64),

    #[error("difference requires the subtrahend to be dominated by the minuend")]
    NotDominated,

    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("invalid path: {0}")]
    BadPath(String),

    #[error("invalid matrix entry at ({row}, {col}): {source}")]
    Entry {
        row: usize,
        col: usize,
        #[source]
        source: Box<IfmError>,
    },

    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = IfmError> = std::result::Result<T, E>;
