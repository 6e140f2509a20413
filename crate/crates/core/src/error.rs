//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by the library.
///
/// Domain failures (a word that is not fully commutative, an inadmissible
/// diagram, an out-of-range generator) are reported through this type; the
/// CLI maps all of them to exit status 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank n={n} for graph kind {kind}")]
    InvalidRank { kind: String, n: usize },

    #[error("generator s{index} does not belong to {graph}")]
    InvalidGenerator { index: usize, graph: String },

    #[error("word [{word}] is not fully commutative and reduced")]
    NotFullyCommutative { word: String },

    #[error("operation undefined on the identity element: {0}")]
    IdentityElement(&'static str),

    #[error("graph mismatch: {left} vs {right}")]
    GraphMismatch { left: String, right: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),

    #[error("inadmissible diagram: {0}")]
    Inadmissible(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("search limit exceeded: {0}")]
    SearchLimit(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
