//! The conjectured Cohen–Lenstra series of the cusp and the matrix-pair
//! count it predicts.
//!
//! The guess is
//! `ẑ(t) = 1/(t q^-1; q^-1)_∞ · Σ_m q^{-m²} t^{2m} / (q^-1; q^-1)_m`.
//! Expanding `1/(x; Q)_∞ = Σ_k x^k/(Q; Q)_k` gives the coefficient
//! `[t^n] ẑ = Σ_{2m+k=n} q^{-m²}/(q^-1;q^-1)_m · q^{-k}/(q^-1;q^-1)_k`.
//!
//! `ẑ` weights finite-length modules supported at the cusp point, so
//! `|GL_n| [t^n] ẑ` counts pairs of *nilpotent* commuting matrices with
//! `A² = B³`.  Counting *all* such pairs (modules over the affine cusp curve)
//! multiplies in the factor `1/(1 - t)` of its smooth locus `A¹ \ {0}`; the
//! alternating-sum formula for all pairs corresponds to `ẑ(t)/(1 - t)`.

use cusp_qalgebra::{gl_order, q_pochhammer, q_pochhammer_inv, LaurentPolyQ, RationalQ};

/// `Σ_j (-1)^j q^{(3j² - j)/2 + n(n - 2j)} (q;q)_n / ((q;q)_j (q;q)_{n-2j})`.
pub fn matrix_count_formula(n: usize) -> LaurentPolyQ {
    let n = n as i64;
    let mut out = LaurentPolyQ::zero();
    for j in 0..=n / 2 {
        let den = &q_pochhammer(j as u32) * &q_pochhammer((n - 2 * j) as u32);
        let ratio = q_pochhammer(n as u32).div_exact(&den).expect("q-multinomial is a polynomial");
        let sign = if j % 2 == 0 { 1 } else { -1 };
        out = &out + &ratio.shift((3 * j * j - j) / 2 + n * (n - 2 * j)).scale(&sign.into());
    }
    out
}

/// `[t^n]` of the conjectured `ẑ(t)` (the punctual series).
pub fn cohen_lenstra_guess_coefficient(n: usize) -> RationalQ {
    let n = n as i64;
    let mut acc = RationalQ::zero();
    for m in 0..=n / 2 {
        let k = n - 2 * m;
        let num = LaurentPolyQ::q_power(-m * m - k);
        let den = &q_pochhammer_inv(m as u32) * &q_pochhammer_inv(k as u32);
        acc = &acc + &RationalQ::new(num, den).expect("nonzero denominator");
    }
    acc
}

/// `[t^n]` of `ẑ(t) / (1 - t)`, the series of the affine cusp curve.
pub fn affine_guess_coefficient(n: usize) -> RationalQ {
    (0..=n).fold(RationalQ::zero(), |acc, k| &acc + &cohen_lenstra_guess_coefficient(k))
}

/// `|GL_n| · c` as a Laurent polynomial, if `c · |GL_n|` is one.
pub fn times_gl_order(n: usize, c: &RationalQ) -> Option<LaurentPolyQ> {
    (c * &RationalQ::from(gl_order(n as u32))).to_poly().ok()
}
