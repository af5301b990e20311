use thiserror::Error;

/// Errors raised anywhere in the crate.
///
/// The variants are grouped by the exit code the command-line front end maps
/// them to (see [`Error::exit_code`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field of order {0} exceeds the supported maximum of 2^16")]
    FieldTooLarge(u128),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("element {value} does not belong to GF({q})")]
    ForeignElement { value: u32, q: u32 },
    #[error("operands belong to different fields ({0} and {1})")]
    FieldMismatch(String, String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("{0}")]
    Degenerate(String),
    #[error("polynomial {0} is reducible")]
    Reducible(String),
    #[error("gcd({n}, {q}) = {gcd} is not 1")]
    NotCoprime { n: u64, q: u64, gcd: u64 },
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("enumeration of {needed} codewords exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("claim not applicable to this code shape: {0}")]
    Shape(String),
    #[error("orbit constants are not uniform across stratum {0}")]
    NonUniformStratum(String),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

impl Error {
    /// Process exit code used by the `cyclocode` binary.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::BudgetExceeded { .. } => 4,
            Error::NotPrime(_)
            | Error::ZeroDegree
            | Error::NotPrimePower(_)
            | Error::FieldTooLarge(_)
            | Error::NotCoprime { .. }
            | Error::InvalidCode(_)
            | Error::Reducible(_)
            | Error::Degenerate(_)
            | Error::ZeroPolynomial => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
