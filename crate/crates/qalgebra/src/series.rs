//! Rational power series in `t` over `Z[q, q^-1]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{LaurentPolyQ, QAlgebraError, Result, TPoly};

/// A rational series `num(t) / den(t)` in `Z[q, q^-1][[t]]`.
///
/// The representation is not normalized; two series are equal iff
/// `num_a * den_b == num_b * den_a`.
#[derive(Clone)]
pub struct TSeries {
    num: TPoly,
    den: TPoly,
}

impl TSeries {
    /// Builds `num / den`, rejecting a zero denominator.
    pub fn new(num: TPoly, den: TPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(QAlgebraError::DivisionByZero);
        }
        Ok(Self { num, den })
    }

    /// A polynomial viewed as a series.
    pub fn from_poly(num: TPoly) -> Self {
        Self { num, den: TPoly::one() }
    }

    /// The numerator.
    pub fn numerator(&self) -> &TPoly {
        &self.num
    }

    /// The denominator.
    pub fn denominator(&self) -> &TPoly {
        &self.den
    }

    /// Consumes the series, returning `(num, den)`.
    pub fn into_parts(self) -> (TPoly, TPoly) {
        (self.num, self.den)
    }

    /// Power-series coefficients of `t^0, ..., t^order`.
    ///
    /// Requires the constant term of the denominator to be a unit `±q^k`.
    pub fn expand(&self, order: usize) -> Result<Vec<LaurentPolyQ>> {
        let d0 = self.den.coeff(0);
        let (sign, k) = d0
            .as_unit_monomial()
            .ok_or_else(|| QAlgebraError::NonUnitConstantTerm(d0.to_string()))?;
        let inv = LaurentPolyQ::monomial(i64::from(sign), -k);
        let mut out: Vec<LaurentPolyQ> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.num.coeff(n);
            for i in 1..=n.min(self.den.degree().unwrap_or(0)) {
                let di = &self.den.coeffs()[i];
                if !di.is_zero() {
                    acc -= &(di * &out[n - i]);
                }
            }
            out.push(&acc * &inv);
        }
        Ok(out)
    }

    /// Rewrites the series over `target`, which must be a multiple of the
    /// current denominator.
    pub fn with_denominator(&self, target: &TPoly) -> Result<Self> {
        let m = target.div_exact(&self.den)?;
        Ok(Self { num: &self.num * &m, den: target.clone() })
    }

    /// Multiplies by a polynomial in `t`.
    pub fn mul_poly(&self, p: &TPoly) -> Self {
        Self { num: &self.num * p, den: self.den.clone() }
    }

    /// Multiplies by a Laurent polynomial in `q`.
    pub fn scale(&self, c: &LaurentPolyQ) -> Self {
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    /// The substitution `f(t; q) -> f(q^a t; q^k)` on numerator and denominator.
    pub fn substitute(&self, a: i64, k: i64) -> Self {
        Self { num: self.num.substitute(a, k), den: self.den.substitute(a, k) }
    }

    /// Specializes `q` to an integer in numerator and denominator.
    pub fn specialize_q(&self, x: &num_bigint::BigInt) -> Result<Self> {
        Self::new(self.num.specialize_q(x)?, self.den.specialize_q(x)?)
    }
}

impl Add for &TSeries {
    type Output = TSeries;
    /// Denominators are multiplied unless they are already equal.
    fn add(self, other: &TSeries) -> TSeries {
        if self.den == other.den {
            return TSeries { num: &self.num + &other.num, den: self.den.clone() };
        }
        TSeries {
            num: &self.num * &other.den + &other.num * &self.den,
            den: &self.den * &other.den,
        }
    }
}

impl Neg for &TSeries {
    type Output = TSeries;
    fn neg(self) -> TSeries {
        TSeries { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &TSeries {
    type Output = TSeries;
    fn sub(self, other: &TSeries) -> TSeries {
        self + &(-other)
    }
}

impl Mul for &TSeries {
    type Output = TSeries;
    fn mul(self, other: &TSeries) -> TSeries {
        TSeries { num: &self.num * &other.num, den: &self.den * &other.den }
    }
}

impl PartialEq for TSeries {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for TSeries {}

impl fmt::Display for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Debug for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TSeries({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TPoly {
        s.parse().unwrap()
    }

    #[test]
    fn geometric_series_expansion() {
        let s = TSeries::new(TPoly::one(), t("1 - q t")).unwrap();
        let c = s.expand(4).unwrap();
        for (n, x) in c.iter().enumerate() {
            assert_eq!(*x, LaurentPolyQ::q_power(n as i64));
        }
    }

    #[test]
    fn unit_constant_term_required() {
        let s = TSeries::new(TPoly::one(), t("2 - t")).unwrap();
        assert!(matches!(s.expand(3), Err(QAlgebraError::NonUnitConstantTerm(_))));
        let s = TSeries::new(TPoly::one(), t("-q^2 + t")).unwrap();
        let c = s.expand(2).unwrap();
        assert_eq!(c[0], "-q^-2".parse().unwrap());
        assert_eq!(c[1], "-q^-4".parse().unwrap());
    }

    #[test]
    fn equality_ignores_representation() {
        let a = TSeries::new(t("1 + t"), t("1 - t^2")).unwrap();
        let b = TSeries::new(TPoly::one(), t("1 - t")).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.with_denominator(&t("1 - t^2")).unwrap().numerator(), &t("1 + t"));
    }
}
