//! Monomial ideals of `R = k[[T^2, T^3]]` contained in the maximal ideal.

use std::fmt;

/// A nonzero monomial ideal `I ⊆ m` of `R`.
///
/// Every such ideal is one of
///
/// * `J(a) = (T^{a+1})` for `a >= 1`, with standard set
///   `{T^2, ..., T^a} ∪ {T^{a+2}}`, and
/// * `K(a) = (T^{a+2}, T^{a+3})` for `a >= 0`, with standard set
///   `{T^2, ..., T^{a+1}}`.
///
/// In both cases `a = dim m / I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CuspIdeal {
    /// `(T^{a+1})`, requires `a >= 1`.
    J(u32),
    /// `(T^{a+2}, T^{a+3})`.
    K(u32),
}

impl CuspIdeal {
    /// Whether the parameters are admissible (`J(0)` is not an ideal of `m`).
    pub fn is_valid(self) -> bool {
        !matches!(self, CuspIdeal::J(0))
    }

    /// The codimension `a = dim m / I`.
    pub fn n(self) -> u32 {
        match self {
            CuspIdeal::J(a) | CuspIdeal::K(a) => a,
        }
    }

    /// The level: `a - 1` for `J(a)`, `a` for `K(a)`.
    pub fn level(self) -> u32 {
        match self {
            CuspIdeal::J(a) => a - 1,
            CuspIdeal::K(a) => a,
        }
    }

    /// T-exponents of the minimal generators, increasing.
    pub fn generators(self) -> Vec<u32> {
        match self {
            CuspIdeal::J(a) => vec![a + 1],
            CuspIdeal::K(a) => vec![a + 2, a + 3],
        }
    }

    /// T-exponents of the standard monomials in `m \ I`, increasing.
    pub fn standard_exponents(self) -> Vec<u32> {
        match self {
            CuspIdeal::J(a) => (2..=a).chain([a + 2]).collect(),
            CuspIdeal::K(a) => (2..=a + 1).collect(),
        }
    }

    /// Whether `T^k` (with `k >= 2`) lies in the ideal.
    pub fn contains(self, k: u32) -> bool {
        k >= 2 && !self.standard_exponents().contains(&k)
    }

    /// Recognizes the ideal from its minimal generator exponents.
    pub fn from_generators(gens: &[u32]) -> Option<Self> {
        match *gens {
            [e] if e >= 2 => Some(CuspIdeal::J(e - 1)),
            [e, f] if e >= 2 && f == e + 1 => Some(CuspIdeal::K(e - 2)),
            _ => None,
        }
    }
}

impl fmt::Display for CuspIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CuspIdeal::J(a) => write!(f, "J({a})"),
            CuspIdeal::K(a) => write!(f, "K({a})"),
        }
    }
}
