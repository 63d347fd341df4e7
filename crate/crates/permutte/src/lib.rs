//! Permutation Tutte polynomials of bipartite graphs, classical Tutte
//! polynomials of multigraphs, and executable forms of the identities and
//! Conde–Merino–Welsh-type inequalities relating them.
//!
//! All invariant computations are exact: rationals are arbitrary-precision
//! reduced fractions and polynomial identities are checked with equality.

pub mod classic_tutte;
pub mod graph;
pub mod perm_tutte;
pub mod ratpoly;
pub mod survey;
pub mod verify;

use thiserror::Error;

/// Crate-wide error type. Variants mirror the failure modes of the
/// individual operations; the CLI maps them onto exit codes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge {0}–{1} joins two vertices on the same side")]
    EdgeWithinSide(u32, u32),
    #[error("unknown vertex {0}")]
    UnknownVertex(u32),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(u32),
    #[error("unknown edge label {0}")]
    UnknownEdge(u32),
    #[error("cannot contract loop {0}")]
    ContractLoop(u32),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge set is not a spanning tree")]
    NotSpanningTree,
    #[error("graph is not simple (loops or parallel edges present)")]
    NotSimple,
    #[error("invalid H(a,b,c) specification: need a,b >= 1 and 0 <= c <= b")]
    InvalidSpec,
    #[error("invalid arguments: {0}")]
    InvalidArgs(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("vertex {0} is not a leaf")]
    NotALeaf(u32),
    #[error("glue roots lie on incompatible sides")]
    IncompatibleSides,
    #[error("tree has fewer than 2 edges")]
    TooSmall,
    #[error("computation budget exhausted: {0}")]
    Budget(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
