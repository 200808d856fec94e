use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("entry {value} out of range 1..={size} in {location}")]
    EntryOutOfRange {
        value: usize,
        size: usize,
        location: String,
    },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("partition is not a congruence of the algebra")]
    NotACongruence,
    #[error("element set is not closed under the operations")]
    NotClosed,
    #[error("element set is empty")]
    EmptyCarrier,
    #[error("bad sandwich matrix: {0}")]
    BadSandwich(String),
    #[error("element {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("invalid partition encoding: {0}")]
    InvalidPartition(String),
    #[error("operation undefined for algebras of size {0}")]
    SizeTooSmall(usize),
    #[error("input too large for exhaustive search: {0}")]
    SizeTooLarge(String),
    #[error("algebra has no operations")]
    NoOperations,
    #[error("algebras are not compatible (different operation signatures)")]
    IncompatibleAlgebras,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
