use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),

    #[error("parts overlap at vertex {0}")]
    OverlappingParts(Vertex),

    #[error("part {0} does not induce a connected subgraph")]
    DisconnectedPart(usize),

    #[error("graph is not connected")]
    NotConnected,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("component with {n} vertices exceeds the exact-solver bound of {bound}")]
    TooLarge { n: usize, bound: usize },

    #[error("input is not a forest")]
    NotAForest,

    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    Degree { vertex: Vertex, degree: usize, expected: usize },

    #[error("missing subdivision length for edge {0}-{1}")]
    MissingLength(Vertex, Vertex),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("height {have} is below the required {need}")]
    InsufficientHeight { have: usize, need: usize },

    #[error("search budget exhausted")]
    Exhausted,

    /// A step whose success is guaranteed by construction failed.
    #[error("internal failure: {0}")]
    Internal(String),
}

impl From<crate::budget::Exhausted> for Error {
    fn from(_: crate::budget::Exhausted) -> Self {
        Error::Exhausted
    }
}
