use thiserror::Error;

use crate::report::Report;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{} failed: {}", .0.subject, .0.first_failure().map(|c| c.summary()).unwrap_or_default())]
    CheckFailed(Box<Report>),
}

pub type Result<T> = std::result::Result<T, Error>;
