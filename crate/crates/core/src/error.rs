use thiserror::Error;

/// Errors shared across the enumeration and verification kernels.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what}: size {got} exceeds cap {cap}")]
    SizeLimit { what: &'static str, cap: usize, got: usize },

    #[error("partition is not an element of this lattice: {0}")]
    ElementNotInLattice(String),

    #[error("tree is not an ID tree: {0}")]
    NotIdTree(String),

    #[error("word violates W condition ({0})")]
    NotWWord(String),

    #[error("excedent function is not a member of the G-set: {0}")]
    NotInGSet(String),

    #[error("expected integral coefficients, found {0}")]
    IntegralityFailure(String),

    #[error("negative result from a count that must be nonnegative: {0}")]
    NegativeResult(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
