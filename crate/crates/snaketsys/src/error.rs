//! Error type shared by every module of the crate.

use crate::quiver::Vertex;
use thiserror::Error;

/// Everything that can go wrong when a precondition of an operation is violated.
///
/// The variants are deliberately fine-grained: the CLI maps them onto exit codes and
/// the property tests assert on the exact variant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A node index outside `[1, n]`.
    #[error("node index {i} is outside [1, {n}]")]
    BadNode { i: usize, n: usize },
    /// Two values built for different ranks were combined.
    #[error("rank mismatch: expected n = {expected}, got n = {got}")]
    RankMismatch { expected: usize, got: usize },
    /// A height function violating its defining step conditions.
    #[error("invalid height function: {0}")]
    InvalidHeight(String),
    /// A vector of the root lattice that is not a root.
    #[error("not a root: {0}")]
    NotARoot(String),
    /// A word whose inversion sequence is not made of distinct positive roots.
    #[error("word is not reduced")]
    NotReduced,
    /// A word that is reduced but is not a word for the longest element.
    #[error("word is not a reduced word of the longest element")]
    NotLongestWord,
    /// A 2-move requested on two letters that do not commute.
    #[error("letters at positions {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    /// A 3-move requested where the letters are not of the form (i, j, i) with |i - j| = 1.
    #[error("letters around position {0} are not a braid pattern (i, j, i)")]
    NotBraidPattern(usize),
    /// Height reflection at a node that is neither a sink nor a source.
    #[error("node {0} is neither a sink nor a source")]
    NotSinkOrSource(usize),
    /// A vertex outside the finite window where the operation is defined.
    #[error("vertex {0} lies outside the window")]
    OutsideWindow(Vertex),
    /// A pair (i, k) that is not a vertex of the repetition quiver.
    #[error("({0}) is not a vertex of the repetition quiver")]
    NotAVertex(Vertex),
    /// A datum whose keys are not exactly the expected carrier.
    #[error("datum carrier mismatch: {0}")]
    WrongCarrier(String),
    /// An operation that needs the other flavour of height function.
    #[error("wrong flavour: {0}")]
    WrongFlavor(String),
    /// Reineke's formula applied on a carrier of the wrong parity.
    #[error("carrier parity {delta} does not match node {j}")]
    ParityMismatch { j: usize, delta: u8 },
    /// A sequence that is not a snake.
    #[error("not a snake: {0}")]
    NotSnake(String),
    /// A sequence that is a snake but not a prime snake.
    #[error("not a prime snake; prime segments start at positions {split_points:?}")]
    NotPrimeSnake { split_points: Vec<usize> },
    /// A pair that is not in prime snake position.
    #[error("{w} is not in prime snake position with respect to {v}")]
    NotPrimeSnakePair { v: Vertex, w: Vertex },
    /// A T-system relation requested for a snake of length < 2.
    #[error("snake is too short (length {0}, need at least 2)")]
    TooShort(usize),
    /// A custom realization table without an entry for the requested window vertex.
    #[error("realization table has no entry for {0}")]
    MissingTableEntry(Vertex),
    /// Malformed input data.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
