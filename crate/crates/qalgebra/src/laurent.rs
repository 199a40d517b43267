//! Laurent polynomials in `q` with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{QAlgebraError, Result};

/// An element of `Z[q, q^-1]`.
///
/// Stored sparsely as `exponent -> coefficient`; zero coefficients are never
/// stored, so structural equality is mathematical equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolyQ {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolyQ {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant `1`.
    pub fn one() -> Self {
        Self::constant(1)
    }

    /// A constant polynomial.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// The monomial `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// The monomial `q^e`.
    pub fn q_power(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Adds `c * q^e` in place.
    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether this is the constant `1`.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Iterates over `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `q^e`.
    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Returns the value if this polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// If this polynomial is `±q^k`, returns `(sign, k)` with `sign = ±1`.
    pub fn as_unit_monomial(&self) -> Option<(i8, i64)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some((1, *e))
        } else if (-c).is_one() {
            Some((-1, *e))
        } else {
            None
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// The substitution `q -> q^k` (with `k = 0` collapsing to the coefficient sum).
    pub fn substitute_power(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (e * k, c.clone())))
    }

    /// `self^n`.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at a rational point.
    pub fn evaluate(&self, x: &BigRational) -> Result<BigRational> {
        if x.is_zero() && self.min_exp().is_some_and(|e| e < 0) {
            return Err(QAlgebraError::PoleAtZero);
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += rational_pow(x, *e) * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Evaluates at an integer point, requiring an integral result.
    pub fn evaluate_integer(&self, x: &BigInt) -> Result<BigInt> {
        let v = self.evaluate(&BigRational::from_integer(x.clone()))?;
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(QAlgebraError::NonIntegral(v.to_string()))
        }
    }

    /// Exact division in `Z[q, q^-1]`.
    ///
    /// Fails with [`QAlgebraError::InexactDivision`] if `divisor` does not
    /// divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(QAlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let inexact = || QAlgebraError::InexactDivision {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        let (bmin, bmax) = (divisor.min_exp().unwrap(), divisor.max_exp().unwrap());
        let lead = divisor.terms[&bmax].clone();
        let floor = self.min_exp().unwrap() - bmin;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(top) = rem.max_exp() {
            let k = top - bmax;
            if k < floor {
                return Err(inexact());
            }
            let (c, r) = rem.terms[&top].div_rem(&lead);
            if !r.is_zero() {
                return Err(inexact());
            }
            rem -= &divisor.shift(k).scale(&c);
            quot.add_term(k, c);
        }
        Ok(quot)
    }
}

fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

impl From<i64> for LaurentPolyQ {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPolyQ {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for LaurentPolyQ {
    /// Descending powers, e.g. `3*q^4 - 2*q^3 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_monomial(f, &abs, *e, "q")?;
        }
        Ok(())
    }
}

/// Writes `abs * var^e` with the conventions `1`, `q`, `q^k`, `c*q^k`.
pub(crate) fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    abs: &BigInt,
    e: i64,
    var: &str,
) -> fmt::Result {
    if e == 0 {
        return write!(f, "{abs}");
    }
    if !abs.is_one() {
        write!(f, "{abs}*")?;
    }
    if e == 1 {
        write!(f, "{var}")
    } else {
        write!(f, "{var}^{e}")
    }
}

impl fmt::Debug for LaurentPolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolyQ({self})")
    }
}

impl FromStr for LaurentPolyQ {
    type Err = QAlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Self::zero();
        for (t, e, c) in crate::parse::parse_terms(s)? {
            if t != 0 {
                return Err(QAlgebraError::Parse(format!("unexpected t in `{s}`")));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl Neg for &LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn neg(self) -> LaurentPolyQ {
        LaurentPolyQ { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn neg(self) -> LaurentPolyQ {
        -&self
    }
}

impl AddAssign<&LaurentPolyQ> for LaurentPolyQ {
    fn add_assign(&mut self, rhs: &LaurentPolyQ) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPolyQ> for LaurentPolyQ {
    fn sub_assign(&mut self, rhs: &LaurentPolyQ) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl MulAssign<&LaurentPolyQ> for LaurentPolyQ {
    fn mul_assign(&mut self, rhs: &LaurentPolyQ) {
        *self = &*self * rhs;
    }
}

impl Mul for &LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn mul(self, rhs: &LaurentPolyQ) -> LaurentPolyQ {
        let mut out = LaurentPolyQ::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Add for &LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn add(self, rhs: &LaurentPolyQ) -> LaurentPolyQ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn sub(self, rhs: &LaurentPolyQ) -> LaurentPolyQ {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPolyQ {
            type Output = LaurentPolyQ;
            fn $m(self, rhs: LaurentPolyQ) -> LaurentPolyQ { (&self).$m(&rhs) }
        }
        impl $tr<&LaurentPolyQ> for LaurentPolyQ {
            type Output = LaurentPolyQ;
            fn $m(self, rhs: &LaurentPolyQ) -> LaurentPolyQ { (&self).$m(rhs) }
        }
        impl $tr<LaurentPolyQ> for &LaurentPolyQ {
            type Output = LaurentPolyQ;
            fn $m(self, rhs: LaurentPolyQ) -> LaurentPolyQ { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPolyQ {
        s.parse().unwrap()
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "1", "-q", "3*q^4 - 2*q^3", "5 + q^-2", "-7*q^12 + q"] {
            assert_eq!(p(s).to_string(), s);
        }
    }

    #[test]
    fn exact_division_and_failure() {
        let a = p("q^3 - 1");
        let b = p("q - 1");
        assert_eq!(a.div_exact(&b).unwrap(), p("q^2 + q + 1"));
        assert!(matches!(p("q^2 + 1").div_exact(&b), Err(QAlgebraError::InexactDivision { .. })));
        assert_eq!(p("2*q^-1 + 2").div_exact(&p("2")).unwrap(), p("q^-1 + 1"));
    }

    #[test]
    fn evaluation_handles_negative_powers() {
        let v = p("q^-1 + q").evaluate(&BigRational::from_integer(2.into())).unwrap();
        assert_eq!(v, BigRational::new(5.into(), 2.into()));
        assert_eq!(p("q^-1").evaluate(&BigRational::zero()), Err(QAlgebraError::PoleAtZero));
    }

    #[test]
    fn unit_monomials_are_recognised() {
        assert_eq!(p("-q^3").as_unit_monomial(), Some((-1, 3)));
        assert_eq!(p("2*q^3").as_unit_monomial(), None);
    }
}
