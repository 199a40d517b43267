use thiserror::Error;

/// Errors raised by the exact q-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QAlgebraError {
    /// A q-binomial coefficient was requested outside `0 <= r <= d`.
    #[error("q-binomial [{d} choose {r}] is undefined (need 0 <= r <= d)")]
    BinomialOutOfRange { d: i64, r: i64 },
    /// A series denominator does not start with a unit `±q^k`.
    #[error("series denominator has non-unit constant term `{0}`")]
    NonUnitConstantTerm(String),
    /// Division by the zero polynomial or the zero series.
    #[error("division by zero")]
    DivisionByZero,
    /// An exact division left a nonzero remainder.
    #[error("division is not exact: `{dividend}` / `{divisor}`")]
    InexactDivision { dividend: String, divisor: String },
    /// A negative power of `q` was evaluated at `q = 0`.
    #[error("negative power of q evaluated at q = 0")]
    PoleAtZero,
    /// The value of a specialization is not an integer where one is required.
    #[error("specialization `{0}` is not an integer")]
    NonIntegral(String),
    /// The order of a root of unity must be positive.
    #[error("invalid root-of-unity order {0}")]
    InvalidRootOrder(u32),
    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
}
