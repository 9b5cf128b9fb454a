use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("weight mismatch: |mu| = {left} but |lambda| = {right}")]
    WeightMismatch { left: u64, right: u64 },

    #[error("{partition} does not fit in the {rows}x{cols} box")]
    NotInBox {
        partition: Partition,
        rows: u32,
        cols: u32,
    },

    #[error("condition {partition} does not fit in the {rows}x{cols} box")]
    ConditionNotInBox {
        partition: Partition,
        rows: u32,
        cols: u32,
    },

    #[error("invalid skew shape: {inner} is not contained in {outer}")]
    InvalidSkew { outer: Partition, inner: Partition },

    #[error("row budget {budget} is smaller than the length {length} of content #{index}")]
    BudgetTooSmall {
        index: usize,
        budget: u32,
        length: usize,
    },

    #[error("tableau does not carry frozen rectangles for the given budgets: {0}")]
    NotFrozen(String),

    #[error("{num_vars} variables cannot represent a partition of length {needed}")]
    TooFewVariables { num_vars: usize, needed: usize },

    #[error("invalid Grassmannian G({a},{b}): both dimensions must be positive")]
    InvalidGrassmannian { a: u32, b: u32 },

    #[error("not a Schubert problem: codimensions sum to {sum}, expected {expected}")]
    NotASchubertProblem { sum: u64, expected: u64 },

    #[error("invalid composition spec: {}", .0.join("; "))]
    SpecInvalid(Vec<String>),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("enumeration too large: {0}")]
    TooLarge(String),
}

impl Error {
    /// Stable variant name, used in machine-readable error output.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::WeightMismatch { .. } => "WeightMismatch",
            Error::NotInBox { .. } => "NotInBox",
            Error::ConditionNotInBox { .. } => "ConditionNotInBox",
            Error::InvalidSkew { .. } => "InvalidSkew",
            Error::BudgetTooSmall { .. } => "BudgetTooSmall",
            Error::NotFrozen(_) => "NotFrozen",
            Error::TooFewVariables { .. } => "TooFewVariables",
            Error::InvalidGrassmannian { .. } => "InvalidGrassmannian",
            Error::NotASchubertProblem { .. } => "NotASchubertProblem",
            Error::SpecInvalid(_) => "SpecInvalid",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::TooLarge(_) => "TooLarge",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
