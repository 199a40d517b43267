use thiserror::Error;

/// Errors raised by the brute-force oracles.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// The enumeration would visit more candidates than the budget allows.
    #[error("enumeration needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    /// The oracle does not support this prime.
    #[error("prime {0} is not supported by this oracle")]
    UnsupportedPrime(u64),
    /// The ambient space does not fit the packed representation.
    #[error("ambient dimension {0} exceeds the packed word size")]
    TooLarge(usize),
    /// Error from the Gröbner layer.
    #[error(transparent)]
    Groebner(#[from] cusp_groebner::GroebnerError),
    /// A pinned element does not match the datum's shape.
    #[error("bad pin: {0}")]
    BadPin(String),
}
