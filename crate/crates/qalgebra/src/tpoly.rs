//! Polynomials in `t` over `Z[q, q^-1]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::laurent::write_monomial;
use crate::{LaurentPolyQ, QAlgebraError, Result};

/// A polynomial `Σ c_i(q) t^i` with `i >= 0`.
///
/// The coefficient vector is kept trimmed (no trailing zeros), so the zero
/// polynomial has an empty vector and structural equality is exact.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TPoly {
    coeffs: Vec<LaurentPolyQ>,
}

impl TPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant `1`.
    pub fn one() -> Self {
        Self::constant(LaurentPolyQ::one())
    }

    /// A polynomial of `t`-degree zero.
    pub fn constant(c: LaurentPolyQ) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: LaurentPolyQ, k: usize) -> Self {
        let mut v = vec![LaurentPolyQ::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    /// Builds a polynomial from its coefficient vector (index = power of `t`).
    pub fn from_coeffs(coeffs: Vec<LaurentPolyQ>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    /// Builds a polynomial from `(t_exp, q_exp, coeff)` triples, summing repeats.
    pub fn from_triples(triples: impl IntoIterator<Item = (usize, i64, BigInt)>) -> Self {
        let mut coeffs: Vec<LaurentPolyQ> = Vec::new();
        for (t, q, c) in triples {
            if coeffs.len() <= t {
                coeffs.resize(t + 1, LaurentPolyQ::zero());
            }
            coeffs[t].add_term(q, c);
        }
        Self::from_coeffs(coeffs)
    }

    /// All `(t_exp, q_exp, coeff)` triples with nonzero coefficient, sorted.
    pub fn triples(&self) -> Vec<(usize, i64, BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .flat_map(|(t, c)| c.terms().map(move |(q, x)| (t, q, x.clone())))
            .collect()
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(LaurentPolyQ::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `t`, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The coefficient vector.
    pub fn coeffs(&self) -> &[LaurentPolyQ] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> LaurentPolyQ {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, mut f: impl FnMut(usize, &LaurentPolyQ) -> LaurentPolyQ) -> Self {
        Self::from_coeffs(self.coeffs.iter().enumerate().map(|(i, c)| f(i, c)).collect())
    }

    /// Multiplies every coefficient by a Laurent polynomial.
    pub fn scale(&self, c: &LaurentPolyQ) -> Self {
        self.map_coeffs(|_, x| x * c)
    }

    /// Multiplies by `t^k`.
    pub fn shift_t(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![LaurentPolyQ::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self { coeffs: v }
    }

    /// Divides by `t^k`, failing unless the `k` lowest coefficients vanish.
    pub fn unshift_t(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(QAlgebraError::InexactDivision {
                dividend: self.to_string(),
                divisor: format!("t^{k}"),
            });
        }
        Ok(Self::from_coeffs(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// The formal substitution `f(t; q) -> f(q^a t; q^k)`.
    ///
    /// The coefficient of `t^i` becomes `c_i(q^k) * q^(a i)`.
    pub fn substitute(&self, a: i64, k: i64) -> Self {
        self.map_coeffs(|i, c| c.substitute_power(k).shift(a * i as i64))
    }

    /// The substitution `t -> t^m`.
    pub fn compose_t_power(&self, m: usize) -> Self {
        assert!(m > 0, "t -> t^0 is not a polynomial substitution here");
        let mut v = vec![LaurentPolyQ::zero(); self.coeffs.len().saturating_sub(1) * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * m] = c.clone();
        }
        Self::from_coeffs(v)
    }

    /// Evaluates the `t`-variable at a Laurent polynomial (Horner's rule).
    pub fn evaluate_t(&self, x: &LaurentPolyQ) -> LaurentPolyQ {
        self.coeffs.iter().rev().fold(LaurentPolyQ::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Specializes `q` to a rational value in every coefficient.
    pub fn evaluate_q(&self, x: &BigRational) -> Result<Vec<BigRational>> {
        self.coeffs.iter().map(|c| c.evaluate(x)).collect()
    }

    /// Specializes `q` to an integer, returning a polynomial with constant
    /// coefficients; fails if any coefficient becomes non-integral.
    pub fn specialize_q(&self, x: &BigInt) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.evaluate_integer(x).map(LaurentPolyQ::constant))
            .collect::<Result<_>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    /// `self^n`.
    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact division in `Z[q, q^-1][t]`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let Some(dd) = divisor.degree() else {
            return Err(QAlgebraError::DivisionByZero);
        };
        let inexact = || QAlgebraError::InexactDivision {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        let lead = &divisor.coeffs[dd];
        let mut rem = self.clone();
        let mut quot = vec![LaurentPolyQ::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return Err(inexact());
            }
            let c = rem.coeffs[rd].div_exact(lead).map_err(|_| inexact())?;
            let k = rd - dd;
            rem = &rem - &divisor.scale(&c).shift_t(k);
            quot[k] = c;
        }
        Ok(Self::from_coeffs(quot))
    }
}

impl fmt::Display for TPoly {
    /// Ascending powers of `t`, each term written as `c*q^a*t^b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (t, c) in self.coeffs.iter().enumerate() {
            for (q, x) in c.terms() {
                let neg = x.is_negative();
                match (first, neg) {
                    (true, true) => write!(f, "-")?,
                    (true, false) => {}
                    (false, true) => write!(f, " - ")?,
                    (false, false) => write!(f, " + ")?,
                }
                first = false;
                let abs = x.abs();
                match (q, t) {
                    (_, 0) => write_monomial(f, &abs, q, "q")?,
                    (0, _) => write_monomial(f, &abs, t as i64, "t")?,
                    _ => {
                        write_monomial(f, &abs, q, "q")?;
                        write!(f, "*")?;
                        write_monomial(f, &BigInt::from(1), t as i64, "t")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly({self})")
    }
}

impl FromStr for TPoly {
    type Err = QAlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        let triples = crate::parse::parse_terms(s)?;
        if triples.iter().any(|(t, _, _)| *t < 0) {
            return Err(QAlgebraError::Parse(format!("negative power of t in `{s}`")));
        }
        Ok(Self::from_triples(triples.into_iter().map(|(t, q, c)| (t as usize, q, c))))
    }
}

impl From<LaurentPolyQ> for TPoly {
    fn from(c: LaurentPolyQ) -> Self {
        Self::constant(c)
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::from_coeffs((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::from_coeffs((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        self.map_coeffs(|_, c| -c)
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut v = vec![LaurentPolyQ::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += &(a * b);
            }
        }
        TPoly::from_coeffs(v)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for TPoly {
            type Output = TPoly;
            fn $m(self, rhs: TPoly) -> TPoly { (&self).$m(&rhs) }
        }
        impl $tr<&TPoly> for TPoly {
            type Output = TPoly;
            fn $m(self, rhs: &TPoly) -> TPoly { (&self).$m(rhs) }
        }
        impl $tr<TPoly> for &TPoly {
            type Output = TPoly;
            fn $m(self, rhs: TPoly) -> TPoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        -&self
    }
}
