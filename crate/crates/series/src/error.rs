use cusp_qalgebra::QAlgebraError;
use cusp_varieties::VarietyError;
use thiserror::Error;

/// Errors raised while assembling or checking series.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// A stratum class could not be computed.
    #[error(transparent)]
    Variety(#[from] VarietyError),
    /// An algebraic operation failed (for example an inexact division).
    #[error(transparent)]
    Algebra(#[from] QAlgebraError),
    /// A numerator that must be a polynomial is not.
    #[error("{0} is not a polynomial over (t;q)_d")]
    NotPolynomial(String),
    /// The recursive system for `NH_d` has no solution.
    #[error("no consistent NH_{d}: {reason}")]
    Inconsistent { d: usize, reason: String },
    /// `r` does not divide `d`.
    #[error("root of unity order {r} does not divide {d}")]
    NotDivisor { d: usize, r: u32 },
    /// Too few series were supplied.
    #[error("need series up to rank {needed}, got {got}")]
    MissingRanks { needed: usize, got: usize },
}
