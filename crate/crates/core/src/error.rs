//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition must have at least one part")]
    EmptyComposition,

    #[error("box ({r},{c}) lies outside the shape")]
    InvalidBox { r: usize, c: usize },

    #[error("entry {entry} out of range 1..={max} for box ({r},{c})")]
    InvalidEntry {
        entry: u32,
        max: u32,
        r: usize,
        c: usize,
    },

    #[error("window {0:?} is not a permutation of 1..=n")]
    NotAPermutation(Vec<usize>),

    #[error("window {0:?} does not have distinct residues mod n")]
    BadResidues(Vec<i64>),

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("letter index {0} does not refer to an s-letter of the word")]
    InvalidSubset(usize),

    #[error("subset entry {entry} exceeds arm bound {max}")]
    SubsetOutOfRange { entry: u32, max: u32 },

    #[error("substitution makes a denominator factor vanish")]
    ZeroDenominator,

    #[error("cannot substitute 0 for a variable with negative exponent")]
    NegativeExponentAtZero,

    #[error("{0} terms exceed the budget of {1}")]
    BudgetExceeded(String, u64),

    #[error("lambda must be a partition (weakly decreasing)")]
    NotAPartition,

    #[error("internal consistency violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
