//! q-Pochhammer symbols, q-binomial coefficients and the q-Pascal pair.

use crate::{LaurentPolyQ, QAlgebraError, Result, TPoly};

/// `k (k - 1) / 2`, the exponent `C(k, 2)` appearing throughout.
pub fn binomial2(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// `(q; q)_n = Π_{i=1}^{n} (1 - q^i)`.
pub fn q_pochhammer(n: u32) -> LaurentPolyQ {
    (1..=i64::from(n)).fold(LaurentPolyQ::one(), |acc, i| {
        &acc * &(LaurentPolyQ::one() - LaurentPolyQ::q_power(i))
    })
}

/// `(q^-1; q^-1)_n = Π_{i=1}^{n} (1 - q^-i)`.
pub fn q_pochhammer_inv(n: u32) -> LaurentPolyQ {
    q_pochhammer(n).substitute_power(-1)
}

/// `(t; q)_d = Π_{i=0}^{d-1} (1 - q^i t)`.
pub fn t_pochhammer(d: u32) -> TPoly {
    t_pochhammer_range(0, d)
}

/// `Π_{i=start}^{start+count-1} (1 - q^i t)`.
pub fn t_pochhammer_range(start: i64, count: u32) -> TPoly {
    (0..i64::from(count)).fold(TPoly::one(), |acc, i| {
        let factor = TPoly::from_coeffs(vec![
            LaurentPolyQ::one(),
            LaurentPolyQ::monomial(-1, start + i),
        ]);
        &acc * &factor
    })
}

/// The Gaussian binomial coefficient `[d choose r]_q`.
///
/// Computed as `(q;q)_d / ((q;q)_r (q;q)_{d-r})` by exact division.
pub fn q_binomial(d: i64, r: i64) -> Result<LaurentPolyQ> {
    if r < 0 || r > d {
        return Err(QAlgebraError::BinomialOutOfRange { d, r });
    }
    let num = q_pochhammer(d as u32);
    let den = &q_pochhammer(r as u32) * &q_pochhammer((d - r) as u32);
    num.div_exact(&den)
}

/// `[d choose r]_{q^-1}`.
pub fn q_binomial_inv(d: i64, r: i64) -> Result<LaurentPolyQ> {
    Ok(q_binomial(d, r)?.substitute_power(-1))
}

/// `|GL_n(F_q)| = Π_{i=0}^{n-1} (q^n - q^i) = q^{n^2} (q^-1; q^-1)_n`.
pub fn gl_order(n: u32) -> LaurentPolyQ {
    let n = i64::from(n);
    (0..n).fold(LaurentPolyQ::one(), |acc, i| {
        &acc * &(LaurentPolyQ::q_power(n) - LaurentPolyQ::q_power(i))
    })
}

/// The lower-triangular q-Pascal matrix `P_ij = [i choose j]_{q^-1}`, `0 <= i, j < n`.
pub fn pascal_matrix(n: usize) -> Vec<Vec<LaurentPolyQ>> {
    (0..n as i64)
        .map(|i| {
            (0..n as i64)
                .map(|j| q_binomial_inv(i, j).unwrap_or_default())
                .collect()
        })
        .collect()
}

/// The claimed inverse `(-1)^{i-j} q^{-C(i-j,2)} [i choose j]_{q^-1}` of [`pascal_matrix`].
pub fn pascal_inverse(n: usize) -> Vec<Vec<LaurentPolyQ>> {
    (0..n as i64)
        .map(|i| {
            (0..n as i64)
                .map(|j| match q_binomial_inv(i, j) {
                    Ok(b) => {
                        let sign = if (i - j) % 2 == 0 { 1 } else { -1 };
                        b.shift(-binomial2(i - j)).scale(&sign.into())
                    }
                    Err(_) => LaurentPolyQ::zero(),
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPolyQ {
        s.parse().unwrap()
    }

    #[test]
    fn small_binomials() {
        assert_eq!(q_binomial(2, 1).unwrap(), p("1 + q"));
        assert_eq!(q_binomial(4, 2).unwrap(), p("1 + q + 2q^2 + q^3 + q^4"));
        assert_eq!(q_binomial(3, 0).unwrap(), LaurentPolyQ::one());
        assert!(q_binomial(3, 4).is_err());
        assert!(q_binomial(3, -1).is_err());
    }

    #[test]
    fn gl_orders() {
        assert_eq!(gl_order(1), p("q - 1"));
        assert_eq!(gl_order(2), p("q^4 - q^3 - q^2 + q"));
        assert_eq!(gl_order(2), q_pochhammer_inv(2).shift(4));
    }

    #[test]
    fn t_pochhammer_expands() {
        let tp: TPoly = "1 - t - q t + q t^2".parse().unwrap();
        assert_eq!(t_pochhammer(2), tp);
    }
}
