use thiserror::Error;

use crate::structure::AxiomReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed structure: {0}")]
    Structural(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("element index {index} out of range for a structure of size {size}")]
    OutOfRange { index: usize, size: usize },

    #[error("structure rejected: {0}")]
    Rejected(Box<AxiomReport>),

    #[error("usage: {0}")]
    Usage(String),

    #[error("|Q| is undefined: `{0}` and its negation are incomparable")]
    AbsUndefined(String),

    #[error("multiplicity not valid: {0}")]
    InvalidMultiplicity(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("value out of domain: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
