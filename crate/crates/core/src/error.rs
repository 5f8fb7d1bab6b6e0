use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("universe mismatch: {left} vs {right} objects")]
    UniverseMismatch { left: usize, right: usize },
    #[error("index {index} outside universe of {len} objects")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("unknown object {0}")]
    UnknownObject(String),
    #[error("unknown element {0}")]
    UnknownElement(String),
    #[error("universe of {size} objects exceeds the exhaustive bound of {bound}")]
    UniverseTooLarge { size: usize, bound: usize },
    #[error("algebra of {size} elements exceeds the bound of {bound}")]
    AlgebraTooLarge { size: usize, bound: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("malformed algebra: {0}")]
    MalformedAlgebra(String),
    #[error("not a three-valued Lukasiewicz algebra: {0} fails")]
    AxiomsFailed(String),
    #[error("not a prime filter")]
    NotPrimeFilter,
    #[error("operation {0} is not well defined on congruence classes")]
    NotWellDefined(String),
    #[error("pair components must be closed and ordered")]
    NotMoisilPair,
    #[error("pair is not the approximation of any set")]
    NotRealizable,
}
