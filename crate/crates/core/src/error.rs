use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range 1..={dim} in tuple {tuple:?}")]
    IndexOutOfRange {
        index: usize,
        dim: usize,
        tuple: Vec<usize>,
    },
    #[error("duplicate entry for index tuple {0:?}")]
    DuplicateEntry(Vec<usize>),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("unsupported arity {0}")]
    UnsupportedArity(usize),
    #[error("slot {slot} out of range for arity {arity}")]
    SlotOutOfRange { slot: usize, arity: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}
