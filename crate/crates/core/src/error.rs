use thiserror::Error;

use crate::shape::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(usize),

    #[error("operation is only defined for rank {expected}, got {actual}")]
    RankMismatch { expected: usize, actual: usize },

    #[error("tableau is not a single column")]
    NotSingleColumn,

    #[error("tableau does not have partition shape")]
    NotPartitionShape,

    #[error("tableau is not semistandard")]
    NotSemistandard,

    #[error("row {0} is not contiguous")]
    NonContiguousRow(usize),

    #[error("column {0} is not contiguous")]
    NonContiguousColumn(usize),

    #[error("cell {0} is not in the support")]
    OutsideSupport(Cell),

    #[error("malformed skew support: {0}")]
    MalformedSupport(String),

    #[error("entry {entry} lies outside [{lo}, {hi}]")]
    EntryOutOfRange { entry: u32, lo: u32, hi: u32 },

    #[error("interval [{0}, {1}] must have even length")]
    OddInterval(u32, u32),

    #[error("invalid interval bounds {0:?}")]
    InvalidInterval(Vec<u32>),

    #[error("crystal index {index} outside 1..={max}")]
    BadCrystalIndex { index: usize, max: usize },

    #[error("character does not decompose: {0}")]
    NonDecomposable(String),

    #[error("sweep needs {needed} tableaux, over the budget of {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
