//! Crate-wide error type.
//!
//! Every fallible operation in the crate returns [`Result`]. Variants carry
//! enough context to render a useful one-line diagnostic (the CLI prints them
//! verbatim on stderr and exits 1).

use thiserror::Error;

/// Errors produced by graph construction, parsing, and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Requested order exceeds the fixed 64-vertex capacity.
    #[error("graph order {n} exceeds the supported maximum of {max} vertices")]
    TooManyVertices { n: usize, max: usize },

    /// An edge (v, v) was supplied; simple graphs have no loops.
    #[error("loop edge ({v}, {v}) is not allowed")]
    LoopEdge { v: usize },

    /// A vertex index fell outside 0..n.
    #[error("vertex {v} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    /// Malformed textual graph input; `offset` is the byte position in the
    /// input where the problem was detected.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// The operation requires at least one vertex.
    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,

    /// A vertex ordering was not a permutation of the vertex set.
    #[error("ordering is not a permutation of 0..{n}")]
    NotAPermutation { n: usize },

    /// An ordering or coloring has the wrong length for the graph.
    #[error("expected {expected} entries for a graph on {expected} vertices, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// Colors must be positive integers (classes are numbered from 1).
    #[error("color {color} at vertex {v} is invalid: colors are numbered from 1")]
    InvalidColor { v: usize, color: usize },

    /// The coloring must be proper for this operation.
    #[error("coloring is not proper: edge ({u}, {v}) joins two vertices of color {color}")]
    NotProper { u: usize, v: usize, color: usize },

    /// A family specification string did not parse.
    #[error("invalid family spec `{spec}`: {message}")]
    BadFamilySpec { spec: String, message: String },

    /// A family parameter is outside its documented domain.
    #[error("family parameter out of range: {message}")]
    FamilyParam { message: String },

    /// The operation is defined for trees only.
    #[error("graph is not a tree ({n} vertices, {edges} edges, connected: {connected})")]
    NotATree {
        n: usize,
        edges: usize,
        connected: bool,
    },

    /// Input size exceeds a solver cap; `hint` says how to proceed.
    #[error("graph order {n} exceeds the cap of {cap} for {what}; {hint}")]
    OverCap {
        n: usize,
        cap: usize,
        what: &'static str,
        hint: &'static str,
    },

    /// A numeric range such as `2..5` did not parse or was empty.
    #[error("invalid range `{text}`: {message}")]
    BadRange { text: String, message: String },

    /// An input file could not be read.
    #[error("cannot read `{path}`: {message}")]
    FileRead { path: String, message: String },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
