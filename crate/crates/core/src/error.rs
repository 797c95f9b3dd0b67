use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("tableau entries must be positive, got {0}")]
    InvalidEntry(usize),
    #[error("partitions {0} and {1} have different weights")]
    IncomparableWeights(String, String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid rank conditions: {0}")]
    InvalidRankConditions(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("tensor arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("slot {slot} out of range for arity {arity}")]
    SlotOutOfRange { slot: usize, arity: usize },
    #[error("variable index {index} out of range (1..{limit})")]
    VariableOutOfRange { index: usize, limit: usize },
    #[error("division by x_{0} - x_{1} is not exact")]
    NonExactDivision(usize, usize),
    #[error("polynomial is not symmetric in x_{0}, x_{1}")]
    NotSymmetric(usize, usize),
    #[error("polynomial is not homogeneous of degree {0}")]
    NotHomogeneous(usize),
    #[error("schur expansion does not re-evaluate to the input")]
    ExpansionMismatch,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
