use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("g^n is the identity: the datum is of nilpotent type")]
    NilpotentType,
    #[error("chi(g) has order {0}; order at least 2 is required")]
    DegenerateOrder(u64),
    #[error("chi^n is not trivial (n = {n}); not a group datum of non-nilpotent type")]
    CharacterOrder { n: u64 },
    #[error("malformed tuple: {0}")]
    MalformedTuple(String),
    #[error("element does not belong to this datum: {0}")]
    DatumMismatch(String),
    #[error("Dickson polynomial index must be at least 1, got {0}")]
    NonPositiveIndex(i64),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: u32, max: u32 },
    #[error("the stable basis is empty")]
    EmptyStableBasis,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("module relation violated: {0}")]
    RelationViolation(String),
    #[error("dimension mismatch: decomposition accounts for {found} of {expected} dimensions")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
