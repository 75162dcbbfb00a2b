use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("label collision after substitution: {0:?}")]
    LabelCollision(String),
    #[error("1 {0} 1 is undefined in a unital dendriform algebra")]
    UnitProduct(char),
    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("element has a nonzero unit part")]
    UnitPart,
    #[error("argument {0} is not primitive")]
    NotPrimitive(usize),
    #[error("empty left argument to the half-shuffle")]
    EmptyWord,
    #[error("missing structure constants: {0}")]
    MissingConstants(String),
    #[error("invalid brace structure: {0}")]
    InvalidBrace(String),
    #[error("degree {degree} exceeds the truncation bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("{0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
