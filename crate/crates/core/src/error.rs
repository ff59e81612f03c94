use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("division by zero in {0}")]
    DivisionByZero(String),

    #[error("not an SL2 character: {0}")]
    NotSl2Character(String),

    #[error("degree {degree} exceeds truncation {truncation}")]
    DegreeOverflow { degree: usize, truncation: usize },

    #[error("arity {n} exceeds the limit {limit}")]
    ArityLimit { n: usize, limit: usize },

    #[error("resource budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("inconsistent system: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
