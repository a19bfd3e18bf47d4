//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by graph construction, parsing and the algebraic algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A vertex name that does not belong to the graph.
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    /// Malformed textual input, with a 1-based line number when known.
    #[error("parse error at line {line}: {message}")]
    Parse {
        /// 1-based line number (0 when not line oriented).
        line: usize,
        /// Human readable description.
        message: String,
    },
    /// Graph violates a structural requirement (loops, duplicates, size).
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    /// A generator was requested with parameters that violate its definition.
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    /// Two objects built over different graphs were combined.
    #[error("graph mismatch")]
    GraphMismatch,
    /// The graph is not balanced; carries the dominated vertex and two
    /// out-set vertices lying in different components of its star complement.
    #[error("graph is not balanced: vertex {vertex} has {left} and {right} in different components")]
    Unbalanced {
        /// The dominated vertex.
        vertex: String,
        /// First out-set vertex.
        left: String,
        /// Second out-set vertex.
        right: String,
    },
    /// The graph is required to be connected.
    #[error("graph is not connected")]
    NotConnected,
    /// An automorphism is not in the subgroup required by an operation.
    #[error("membership failure: {0}")]
    Membership(String),
    /// A descent that the theory guarantees to succeed got stuck.
    #[error("descent failure: {0}")]
    Descent(String),
    /// A relator or rewriting precondition is not met.
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
