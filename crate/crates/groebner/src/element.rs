//! Truncated elements of `mF` and of the ring `R`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use crate::{in_semigroup, GroebnerError, Monomial, PrimeField};

/// An element of `mF / T^trunc F` over `F_p`.
///
/// Terms of T-degree `>= trunc` are identified with zero and silently
/// dropped; terms of T-degree `< 2` are rejected, since every element lives in
/// the maximal-ideal submodule `mF`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    field: PrimeField,
    trunc: u32,
    terms: BTreeMap<Monomial, u64>,
}

impl Element {
    /// The zero element.
    pub fn zero(field: PrimeField, trunc: u32) -> Self {
        Self { field, trunc, terms: BTreeMap::new() }
    }

    /// Builds an element from `(monomial, coefficient)` pairs; coefficients
    /// are reduced mod `p` and repeated monomials summed.
    pub fn from_terms(
        field: PrimeField,
        trunc: u32,
        terms: impl IntoIterator<Item = (Monomial, i64)>,
    ) -> Result<Self, GroebnerError> {
        let mut e = Self::zero(field, trunc);
        for (m, c) in terms {
            if m.t_deg < 2 || m.basis == 0 {
                return Err(GroebnerError::NotInMaximalIdeal { t_deg: m.t_deg, basis: m.basis });
            }
            e.add_term(m, field.from_i64(c));
        }
        Ok(e)
    }

    /// The single term `c * m`.
    pub fn monomial(field: PrimeField, trunc: u32, m: Monomial, c: u64) -> Self {
        let mut e = Self::zero(field, trunc);
        e.add_term(m, c % field.p());
        e
    }

    /// Adds `c * m` (with `c` already reduced).
    pub(crate) fn add_term(&mut self, m: Monomial, c: u64) {
        debug_assert!(m.t_deg >= 2, "term {m} outside mF");
        if c == 0 || m.t_deg >= self.trunc {
            return;
        }
        let f = self.field;
        let entry = self.terms.entry(m).or_insert(0);
        *entry = f.add(*entry, c);
        if *entry == 0 {
            self.terms.remove(&m);
        }
    }

    /// The coefficient field.
    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// The truncation order `N` (terms of T-degree `>= N` vanish).
    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    /// Whether the element is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing `≺` order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, u64)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, *c))
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `m`.
    pub fn coeff(&self, m: Monomial) -> u64 {
        self.terms.get(&m).copied().unwrap_or(0)
    }

    /// The leading (`≺`-least) term.
    pub fn leading_term(&self) -> Option<(Monomial, u64)> {
        self.terms.iter().next().map(|(m, c)| (*m, *c))
    }

    /// The leading monomial.
    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.keys().next().copied()
    }

    /// Multiplies by the scalar `c`.
    pub fn scale(&self, c: u64) -> Self {
        let mut out = Self::zero(self.field, self.trunc);
        for (m, x) in &self.terms {
            out.add_term(*m, self.field.mul(*x, c % self.field.p()));
        }
        out
    }

    /// Rescales so that the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(self.field.inv(c)),
            None => self.clone(),
        }
    }

    /// Multiplies by `T^k`; `k` must lie in the semigroup `{0, 2, 3, ...}`.
    pub fn mul_t(&self, k: u32) -> Self {
        assert!(in_semigroup(k), "T^{k} is not in R");
        let mut out = Self::zero(self.field, self.trunc);
        for (m, c) in &self.terms {
            out.add_term(m.shift(k), *c);
        }
        out
    }

    /// `self += c * T^k * other`.
    pub fn add_scaled(&mut self, other: &Self, c: u64, k: u32) {
        assert!(in_semigroup(k), "T^{k} is not in R");
        let c = c % self.field.p();
        for (m, x) in &other.terms {
            self.add_term(m.shift(k), self.field.mul(*x, c));
        }
    }

    /// `r * self` for a ring element `r` of `R`.
    pub fn mul_ring(&self, r: &RingElement) -> Self {
        let mut out = Self::zero(self.field, self.trunc);
        for (k, c) in r.terms() {
            out.add_scaled(self, c, k);
        }
        out
    }

    pub(crate) fn terms_map(&self) -> &BTreeMap<Monomial, u64> {
        &self.terms
    }

    /// Checks that `other` shares the prime and truncation order.
    pub fn same_context(&self, other: &Self) -> bool {
        self.field == other.field && self.trunc == other.trunc
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, 1, 0);
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, self.field.p() - 1, 0);
        out
    }
}

impl fmt::Display for Element {
    /// Ascending terms, e.g. `T^3*u1 + 2*T^4*u1`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c != 1 {
                write!(f, "{c}*")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[F_{}, T^{}]({self})", self.field.p(), self.trunc)
    }
}

/// An element `Σ c_k T^k` of `R = F_p[[T^2, T^3]]`, with `k` in `{0, 2, 3, ...}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RingElement {
    terms: BTreeMap<u32, u64>,
}

impl RingElement {
    /// The zero ring element.
    pub fn zero() -> Self {
        Self::default()
    }

    /// Adds `c T^k` modulo `p`.
    pub fn add_term(&mut self, field: PrimeField, k: u32, c: u64) {
        assert!(in_semigroup(k), "T^{k} is not in R");
        let entry = self.terms.entry(k).or_insert(0);
        *entry = field.add(*entry, c % field.p());
        if *entry == 0 {
            self.terms.remove(&k);
        }
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, *c))
    }

    /// Whether this is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    #[test]
    fn truncation_and_rejection() {
        let e = Element::from_terms(f5(), 6, [(Monomial::new(3, 1), 1), (Monomial::new(6, 1), 4)])
            .unwrap();
        assert_eq!(e.num_terms(), 1);
        assert!(Element::from_terms(f5(), 6, [(Monomial::new(1, 1), 1)]).is_err());
        assert!(Element::from_terms(f5(), 6, [(Monomial::new(2, 0), 1)]).is_err());
    }

    #[test]
    fn display_format() {
        let e = Element::from_terms(f5(), 10, [(Monomial::new(3, 1), 1), (Monomial::new(4, 1), 2)])
            .unwrap();
        assert_eq!(e.to_string(), "T^3*u1 + 2*T^4*u1");
        assert_eq!(e.mul_t(2).to_string(), "T^5*u1 + 2*T^6*u1");
        assert_eq!(e.scale(3).monic(), e);
    }
}
