//! Monomials `T^k u_i` of `F = R^d` and their divisibility over `R = k[[T^2, T^3]]`.

use std::collections::BTreeSet;
use std::fmt;

/// The monomial `T^t_deg * u_basis`, with `basis` in `1..=d`.
///
/// The derived order compares `(t_deg, basis)` lexicographically; this is the
/// term order `≺` used throughout, and leading terms are `≺`-least.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    /// Exponent of `T`.
    pub t_deg: u32,
    /// Basis index, starting at 1.
    pub basis: u32,
}

impl Monomial {
    /// `T^t_deg * u_basis`.
    pub const fn new(t_deg: u32, basis: u32) -> Self {
        Self { t_deg, basis }
    }

    /// Multiplies by `T^k`.
    pub const fn shift(self, k: u32) -> Self {
        Self { t_deg: self.t_deg + k, basis: self.basis }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.t_deg {
            0 => write!(f, "u{}", self.basis),
            1 => write!(f, "T*u{}", self.basis),
            k => write!(f, "T^{k}*u{}", self.basis),
        }
    }
}

/// Whether `T^k` lies in `R`, i.e. `k` belongs to the semigroup `{0, 2, 3, ...}`.
pub const fn in_semigroup(k: u32) -> bool {
    k != 1
}

/// If `mu` divides `nu` in `F` over `R`, returns the exponent `k` with `nu = T^k mu`.
pub fn divides(mu: Monomial, nu: Monomial) -> Option<u32> {
    if mu.basis != nu.basis || nu.t_deg < mu.t_deg {
        return None;
    }
    let k = nu.t_deg - mu.t_deg;
    in_semigroup(k).then_some(k)
}

/// The minimal common multiples of `mu` and `nu`.
///
/// Empty for different basis indices.  For `m = max` of the two exponents the
/// set is `{T^m}` unless the exponents differ by exactly one, in which case it
/// is `{T^{m+2}, T^{m+3}}`.  Computed by scanning candidates and keeping the
/// minimal ones, which avoids special-casing.
pub fn lcm_set(mu: Monomial, nu: Monomial) -> BTreeSet<Monomial> {
    if mu.basis != nu.basis {
        return BTreeSet::new();
    }
    let m = mu.t_deg.max(nu.t_deg);
    let common: Vec<Monomial> = (m..=m + 5)
        .map(|k| Monomial::new(k, mu.basis))
        .filter(|c| divides(mu, *c).is_some() && divides(nu, *c).is_some())
        .collect();
    common
        .iter()
        .filter(|c| !common.iter().any(|o| o != *c && divides(*o, **c).is_some()))
        .copied()
        .collect()
}
