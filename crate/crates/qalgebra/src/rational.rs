//! Formal quotients of Laurent polynomials.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::{LaurentPolyQ, QAlgebraError, Result};

/// A formal quotient `num / den` of Laurent polynomials.
///
/// No normal form is maintained; equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct RationalQ {
    num: LaurentPolyQ,
    den: LaurentPolyQ,
}

impl RationalQ {
    /// Builds `num / den`, rejecting a zero denominator.
    pub fn new(num: LaurentPolyQ, den: LaurentPolyQ) -> Result<Self> {
        if den.is_zero() {
            return Err(QAlgebraError::DivisionByZero);
        }
        Ok(Self { num, den })
    }

    /// Embeds a Laurent polynomial.
    pub fn from_poly(num: LaurentPolyQ) -> Self {
        Self { num, den: LaurentPolyQ::one() }
    }

    /// The zero element.
    pub fn zero() -> Self {
        Self::from_poly(LaurentPolyQ::zero())
    }

    /// The numerator as stored.
    pub fn numerator(&self) -> &LaurentPolyQ {
        &self.num
    }

    /// The denominator as stored.
    pub fn denominator(&self) -> &LaurentPolyQ {
        &self.den
    }

    /// Whether this quotient is zero.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Multiplicative inverse.
    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Returns the Laurent polynomial `num / den` if the division is exact.
    pub fn to_poly(&self) -> Result<LaurentPolyQ> {
        self.num.div_exact(&self.den)
    }

    /// Evaluates at a rational point.
    pub fn evaluate(&self, x: &num_rational::BigRational) -> Result<BigRational> {
        let d = self.den.evaluate(x)?;
        if num_traits::Zero::is_zero(&d) {
            return Err(QAlgebraError::DivisionByZero);
        }
        Ok(self.num.evaluate(x)? / d)
    }

    /// The substitution `q -> q^k` applied to numerator and denominator.
    pub fn substitute_power(&self, k: i64) -> Result<Self> {
        Self::new(self.num.substitute_power(k), self.den.substitute_power(k))
    }
}

impl PartialEq for RationalQ {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalQ {}

impl fmt::Display for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalQ({self})")
    }
}

impl From<LaurentPolyQ> for RationalQ {
    fn from(p: LaurentPolyQ) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RationalQ {
    type Output = RationalQ;
    fn add(self, rhs: &RationalQ) -> RationalQ {
        if self.den == rhs.den {
            return RationalQ { num: &self.num + &rhs.num, den: self.den.clone() };
        }
        RationalQ {
            num: &self.num * &rhs.den + &rhs.num * &self.den,
            den: &self.den * &rhs.den,
        }
    }
}

impl Sub for &RationalQ {
    type Output = RationalQ;
    fn sub(self, rhs: &RationalQ) -> RationalQ {
        self + &(-rhs)
    }
}

impl Neg for &RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        RationalQ { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RationalQ {
    type Output = RationalQ;
    fn mul(self, rhs: &RationalQ) -> RationalQ {
        RationalQ { num: &self.num * &rhs.num, den: &self.den * &rhs.den }
    }
}

impl Div for &RationalQ {
    type Output = Result<RationalQ>;
    fn div(self, rhs: &RationalQ) -> Result<RationalQ> {
        RationalQ::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}
