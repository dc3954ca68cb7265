use thiserror::Error;

use crate::exactmath::FieldSpec;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field error: {0}")]
    Field(String),
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: FieldSpec, found: FieldSpec },
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parity error: {0}")]
    Parity(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    #[error("unknown catalog key {0:?}")]
    UnknownKey(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
