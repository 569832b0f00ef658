use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    InvalidPrime(u64),

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("digit {digit} is out of range for p = {p}")]
    InvalidDigit { digit: u32, p: u32 },

    #[error("characters over different primes ({0} and {1})")]
    CharMismatch(u32, u32),

    #[error("not the character of a module: {0}")]
    NotAModuleCharacter(String),

    #[error("G1-cohomology of a restricted pair is only available in degrees 0 and 1, got {0}")]
    UnsupportedDegree(u32),

    #[error("weight {0} is too large for character arithmetic")]
    Overflow(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("E2 page has nonzero entries in both parities of m for L({0})")]
    MixedParity(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
