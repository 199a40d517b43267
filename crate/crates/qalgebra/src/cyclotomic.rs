//! Cyclotomic polynomials and evaluation at roots of unity.
//!
//! A primitive `r`-th root of unity `ζ_r` is modelled exactly in
//! `Z[x] / Φ_r(x)`: a Laurent polynomial in `q` is evaluated at `ζ_r` by
//! reducing exponents modulo `r` and then reducing modulo the monic
//! polynomial `Φ_r`.  The canonical representative has degree `< φ(r)`.

use num_rational::BigRational;

use crate::{LaurentPolyQ, QAlgebraError, Result, TPoly};

/// The `r`-th cyclotomic polynomial `Φ_r(q)`.
pub fn cyclotomic_polynomial(r: u32) -> Result<LaurentPolyQ> {
    if r == 0 {
        return Err(QAlgebraError::InvalidRootOrder(r));
    }
    let mut p = LaurentPolyQ::q_power(i64::from(r)) - LaurentPolyQ::one();
    for d in 1..r {
        if r % d == 0 {
            p = p.div_exact(&cyclotomic_polynomial(d)?)?;
        }
    }
    Ok(p)
}

/// Canonical representative of `p(ζ_r)` in `Z[q] / Φ_r(q)`.
pub fn reduce_mod_cyclotomic(p: &LaurentPolyQ, r: u32) -> Result<LaurentPolyQ> {
    let phi = cyclotomic_polynomial(r)?;
    let r = i64::from(r);
    let mut rem = LaurentPolyQ::from_terms(p.terms().map(|(e, c)| (e.rem_euclid(r), c.clone())));
    let deg = phi.max_exp().unwrap_or(0);
    while let Some(top) = rem.max_exp() {
        if top < deg {
            break;
        }
        // Φ_r is monic, so the leading coefficient divides exactly.
        let c = rem.coeff(top);
        rem -= &phi.shift(top - deg).scale(&c);
    }
    Ok(rem)
}

/// A point at which `q` can be specialized exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QValue {
    /// A rational number.
    Rational(BigRational),
    /// A primitive root of unity of the given order.
    RootOfUnity(u32),
}

/// The exact value of a specialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QEval {
    /// A rational number.
    Rational(BigRational),
    /// A canonical element of `Z[ζ_r]`, written as a polynomial in `q = ζ_r`.
    Cyclotomic { order: u32, value: LaurentPolyQ },
}

/// Evaluates `x` at the given point.
pub fn evaluate_q(x: &LaurentPolyQ, value: &QValue) -> Result<QEval> {
    match value {
        QValue::Rational(v) => Ok(QEval::Rational(x.evaluate(v)?)),
        QValue::RootOfUnity(r) => Ok(QEval::Cyclotomic {
            order: *r,
            value: reduce_mod_cyclotomic(x, *r)?,
        }),
    }
}

impl TPoly {
    /// Reduces every coefficient modulo `Φ_r`, i.e. specializes `q = ζ_r`.
    pub fn reduce_at_root_of_unity(&self, r: u32) -> Result<TPoly> {
        let coeffs = self
            .coeffs()
            .iter()
            .map(|c| reduce_mod_cyclotomic(c, r))
            .collect::<Result<_>>()?;
        Ok(TPoly::from_coeffs(coeffs))
    }
}

/// Euler's totient, the degree of `Φ_r`.
pub fn euler_phi(r: u32) -> u32 {
    (1..=r).filter(|k| num_integer::gcd(*k, r) == 1).count() as u32
}
