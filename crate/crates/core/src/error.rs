use std::fmt;

use thiserror::Error;

use crate::circle::CircleModelViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// One problem found while parsing a text file, tied to its 1-based line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid circular-arc model: {}", join(.0))]
    InvalidModel(Vec<CircleModelViolation>),
    #[error("invalid path {id}: {reason}")]
    InvalidPath { id: String, reason: String },
    #[error("duplicate identifier {0}")]
    DuplicateId(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("model not normal")]
    NotNormal,
    #[error("four points are not certified for this model")]
    UncertifiedFourPoints,
    #[error("graph is chordal along this model: no arc contains point p{0}")]
    ChordalAlongModel(usize),
    #[error("domination not realizable in this model")]
    DominationNotRealizable,
    #[error("not a B1 C4 witness: {0}")]
    NotB1C4Witness(String),
    #[error("not an EPR model: {0}")]
    NotEpr(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("{}", join(.0))]
    Parse(Vec<Diagnostic>),
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
