use thiserror::Error;

use crate::diagrams::Complex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("complex mismatch: expected {expected}, found {found}")]
    ComplexMismatch { expected: Complex, found: Complex },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("zero has no odd decomposition")]
    ZeroSubscript,

    #[error("{op} is not defined on {generator}")]
    Unsupported { op: &'static str, generator: String },

    #[error("input is not a cycle")]
    NotACycle,

    #[error("element is not homogeneous in winding")]
    MixedWinding,

    #[error("invalid truncation: {0}")]
    InvalidSpec(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
