use thiserror::Error;

use crate::canonical::Side;

/// A `2+2` witness: `a ≺ b`, `c ≺ d`, `a ⊀ d` and `c ⊀ b` (0-based indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoPlusTwo {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl TwoPlusTwo {
    /// The certificate as 1-based labels `[a, b, c, d]`.
    pub fn labels(&self) -> [usize; 4] {
        [self.a + 1, self.b + 1, self.c + 1, self.d + 1]
    }
}

/// Errors raised across the crate. Element references in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element label {label} is outside 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("relation is not irreflexive: {} precedes itself", .0 + 1)]
    NotIrreflexive(usize),

    #[error("relation is not transitively closed: missing {} < {}", .0 + 1, .1 + 1)]
    NotTransitive(usize, usize),

    #[error("not an interval order: 2+2 on {:?}", .0.labels())]
    NotIntervalOrder(TwoPlusTwo),

    #[error("malformed interval {} = [{left}, {right}]", .index + 1)]
    MalformedInterval { index: usize, left: i64, right: i64 },

    #[error("not an ascent sequence: entry at position {index} is out of range")]
    NotAscentSequence { index: usize },

    #[error("orders have different sizes ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },

    #[error("[{i}, {j}] is not a gap between consecutive endpoints")]
    NotAGap { i: i64, j: i64 },

    #[error("gap [{i}, {j}] cannot be collapsed from the {side:?} side")]
    SideConditionViolated { i: i64, j: i64, side: Side },

    #[error("slack of ({}, {}) is undefined because {} precedes {}", .x + 1, .y + 1, .y + 1, .x + 1)]
    UndefinedSlack { x: usize, y: usize },

    #[error("vertex sequence is not a directed cycle of the key graph")]
    NotACycle,

    #[error("cycle enumeration exceeded the limit of {0} cycles")]
    CycleLimitExceeded(usize),

    #[error("expected a vector with {expected} coordinates, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("extender enumeration exceeded the limit of {0} sets")]
    ExtenderLimitExceeded(usize),

    #[error("search exceeded the length bound {0}")]
    SearchBoundExceeded(usize),

    #[error("malformed JSON at line {line}, column {column}: {message}")]
    MalformedJson {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("length vector has a negative coordinate at element {}", .index + 1)]
    NegativeLength { index: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
