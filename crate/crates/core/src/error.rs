use thiserror::Error;

/// Errors raised by the library. All of them indicate invalid input except
/// [`Error::Internal`], which signals a broken invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set of {0} elements exceeds the supported maximum of 64")]
    GroundSetTooLarge(usize),
    #[error("element {element} is outside the ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("expected {expected} labels, got {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("rank bound {k} exceeds matroid rank {rank}")]
    RankOutOfRange { k: usize, rank: usize },
    #[error("invalid basis family: {0}")]
    InvalidBases(String),
    #[error("{0} is not a basis")]
    NotABasis(String),
    #[error("element {0} is not in the basis")]
    NotInBasis(usize),
    #[error("element {0} is a loop")]
    LoopElement(usize),
    #[error("family is not an antichain: {0} is contained in {1}")]
    NotAntichain(String, String),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension {0} exceeds the supported maximum of 63")]
    DimensionTooLarge(usize),
    #[error("configuration has {found} points but the matroid has {expected} elements")]
    SizeMismatch { expected: usize, found: usize },
    #[error("target points with -inf entries are not supported")]
    InfiniteTarget,
    #[error("matroid rank {rank} must equal d + 1 = {expected}")]
    RankNotDimPlusOne { rank: usize, expected: usize },
    #[error("cannot realize complex: element {0} lies in every facet")]
    ElementInAllFacets(usize),
    #[error("cannot realize a complex without facets")]
    NoFacets,
    #[error("invalid colorful LP instance: {0}")]
    InvalidInstance(String),
    #[error("invalid 3-dimensional matching instance: {0}")]
    InvalidMatching(String),
    #[error("variable {index} out of range for {n} variables")]
    VariableOutOfRange { index: usize, n: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
