use thiserror::Error;

/// Errors raised by the workbench.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: conductor {left} vs conductor {right}")]
    FieldMismatch { left: u64, right: u64 },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("algebra has a nonzero radical of dimension {0}")]
    NonzeroRadical(usize),

    #[error("budget exceeded: {rows} rows x {cols} columns exceeds {budget} entries")]
    BudgetExceeded { rows: u128, cols: u128, budget: u128 },

    #[error("no invariant complement found: {0}")]
    NoInvariantComplement(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("insufficient field: conductor must be divisible by {required}")]
    InsufficientField { required: u64 },

    #[error("group closure exceeds the size bound {0}")]
    GroupTooLarge(usize),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
