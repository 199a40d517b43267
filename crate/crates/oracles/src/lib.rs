//! Independent brute-force counts over small prime fields.
//!
//! * [`count_quot_bruteforce`] enumerates subspaces of a truncation of `mF`
//!   and keeps the `R`-submodules, for `R = k[[T², T³]]`.
//! * [`count_stratum_bruteforce`] enumerates reduced prebases with a fixed
//!   leading submodule and keeps the Gröbner bases.
//! * [`count_nilpotent_pairs`] and [`count_all_pairs`] count commuting
//!   matrix pairs with `A² = B³`.
//!
//! Every enumeration is bounded by a [`Budget`]; exceeding it is an error.

mod error;
mod pairs;
mod quot;
mod stratum;

pub use error::OracleError;
pub use pairs::{
    count_all_pairs, count_all_pairs_with_budget, count_nilpotent_pairs,
    count_nilpotent_pairs_with_budget,
};
pub use quot::{count_quot_bruteforce, count_quot_bruteforce_with_budget, gaussian_binomial};
pub use stratum::{
    count_central_stratum, count_stratum_bruteforce, count_stratum_bruteforce_with_budget,
    count_stratum_pinned, stratum_shape, GeneratorShape,
};

/// An upper bound on the number of candidates an enumeration may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of candidates.
    pub max_candidates: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Self { max_candidates: 1 << 27 }
    }
}

impl Budget {
    /// Fails if `needed` candidates exceed the budget.
    pub fn check(self, needed: u128) -> Result<(), OracleError> {
        if needed > self.max_candidates {
            Err(OracleError::BudgetExceeded { needed, budget: self.max_candidates })
        } else {
            Ok(())
        }
    }
}
