use crate::partition::{Cell, Partition};

/// Errors raised by precondition checks across the crate.
///
/// Vanishing crystal operators are not errors; they are reported as `None`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parts {0:?} are not weakly decreasing")]
    NotWeaklyDecreasing(Vec<usize>),

    #[error("{inner} is not contained in {outer}")]
    NotContained { outer: Partition, inner: Partition },

    #[error("{shape} has nonempty {r}-core {core}")]
    NonEmptyCore {
        shape: Partition,
        r: usize,
        core: Partition,
    },

    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: usize, found: usize },

    #[error("entry {entry} lies outside the alphabet 1..={bound}")]
    EntryOutOfRange { entry: u32, bound: usize },

    #[error("cell {0} is not an inside corner")]
    NotInsideCorner(Cell),

    #[error("cell {0} is not an addable outside cell")]
    NotAddable(Cell),

    #[error("crystal index {i} outside 1..{s}")]
    IndexOutOfRange { i: usize, s: usize },

    #[error("expected a straight-shape tableau")]
    NotStraight,

    #[error("not a semistandard filling: {0}")]
    NotSemistandard(String),

    #[error("{0} is not rectangular")]
    NotRectangular(Partition),

    #[error("{d} does not divide {n}")]
    NotDivisor { n: usize, d: usize },

    #[error("{what} has {found} positive parts, at most {max} allowed")]
    TooManyParts {
        what: &'static str,
        found: usize,
        max: usize,
    },

    #[error("{action} maps a tableau outside {set}: {tableau}")]
    ClosureViolation {
        action: &'static str,
        set: &'static str,
        tableau: String,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
