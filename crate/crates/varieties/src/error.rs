use thiserror::Error;

/// Errors raised by the staircase-variety engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VarietyError {
    /// The datum has a component of color `J`.
    #[error("datum {0} is not purely of color K")]
    NotPureK(String),
    /// The modulus is not a prime.
    #[error("{0} is not a prime")]
    BadPrime(u64),
    /// The enumeration would exceed the configured budget.
    #[error("search space of {needed} candidates exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    /// No symbolic table is available in this rank.
    #[error("no symbolic class is known for non-stable pure-K data of rank {d}")]
    SymbolicRange { d: usize },
    /// A distance-class pattern that cannot occur for any datum.
    #[error("distance classes {0} do not occur for any datum")]
    UnknownClass(String),
    /// Wrong number of distance classes for the rank.
    #[error("rank {d} needs {expected} distance classes, got {got}")]
    ClassCount { d: usize, expected: usize, got: usize },
    /// The matrix pair violates the defining equations.
    #[error("matrix pair is not a point of the staircase variety")]
    NotOnVariety,
    /// The vector `(z, w)` is not in the kernel of `A`.
    #[error("extension vector is not in ker A")]
    NotInKernel,
    /// Inconsistent matrix or vector shapes.
    #[error("shape mismatch: {0}")]
    Shape(String),
}
