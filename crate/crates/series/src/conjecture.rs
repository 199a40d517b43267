//! The conjectured closed form of `NH_d` and the checks around it.

use cusp_qalgebra::{
    binomial2, cyclotomic_polynomial, q_binomial, t_pochhammer, LaurentPolyQ, TPoly,
};

use crate::SeriesError;

/// `(-t; q)_d = Π_{i=0}^{d-1} (1 + q^i t)`.
fn neg_t_pochhammer(d: usize) -> TPoly {
    (0..d as i64).fold(TPoly::one(), |acc, i| {
        &acc * &TPoly::from_coeffs(vec![LaurentPolyQ::one(), LaurentPolyQ::q_power(i)])
    })
}

/// The closed form `Σ_j q^{C(j+1,2) + j(d-j)} c_j(q) t^j` with
/// `Σ_j c_j t^j = (-t; q)_d`.
pub fn nh_guess(d: usize) -> TPoly {
    let c = neg_t_pochhammer(d);
    c.map_coeffs(|j, cj| {
        let j = j as i64;
        cj.shift(binomial2(j + 1) + j * (d as i64 - j))
    })
}

/// `Σ_{r<d} t^r [d r]_q (t;q)_{d-r} NH_r(t q^{d-r})`, the right-hand side of
/// `NH_d(t²) - t^d NH_d(t)`.
pub fn theta_rhs(d: usize, known: &[TPoly]) -> Result<TPoly, SeriesError> {
    if known.len() < d {
        return Err(SeriesError::MissingRanks { needed: d.saturating_sub(1), got: known.len() });
    }
    let mut out = TPoly::zero();
    for (r, nh_r) in known.iter().enumerate().take(d) {
        let term = &nh_r.substitute((d - r) as i64, 1) * &t_pochhammer((d - r) as u32);
        out = &out + &term.scale(&q_binomial(d as i64, r as i64)?).shift_t(r);
    }
    Ok(out)
}

/// `Θ_d(f) = f(t²) - t^d f(t)`.
pub fn theta(d: usize, f: &TPoly) -> TPoly {
    &f.compose_t_power(2) - &f.shift_t(d)
}

/// Solves `Θ_d(NH_d) = Σ_{r<d} ...` for `NH_d` given `NH_0, ..., NH_{d-1}`.
///
/// With `NH_d = Σ a_i t^i` and `a_d = q^{d²}`, the coefficients of `t^{i+d}`
/// (`i = d-1, ..., 0`) determine `a_i = [i+d even] a_{(i+d)/2} - R_{i+d}`.
/// The remaining coefficients, `a_0 = 1` and the functional equation are
/// then verified; any failure is reported as an inconsistency.
pub fn solve_nh(d: usize, known: &[TPoly]) -> Result<TPoly, SeriesError> {
    let rhs = theta_rhs(d, known)?;
    let mut a = vec![LaurentPolyQ::zero(); d + 1];
    a[d] = LaurentPolyQ::q_power((d * d) as i64);
    for i in (0..d).rev() {
        let k = i + d;
        let even = if k % 2 == 0 { a[k / 2].clone() } else { LaurentPolyQ::zero() };
        a[i] = &even - &rhs.coeff(k);
    }
    let f = TPoly::from_coeffs(a);
    let inconsistent = |reason: String| SeriesError::Inconsistent { d, reason };
    if theta(d, &f) != rhs {
        return Err(inconsistent(format!("Θ_d({f}) differs from the recursion")));
    }
    if !f.coeff(0).is_one() {
        return Err(inconsistent(format!("constant term {} is not 1", f.coeff(0))));
    }
    if !functional_equation_check(d, &f) {
        return Err(inconsistent(format!("{f} violates the functional equation")));
    }
    Ok(f)
}

/// Runs [`solve_nh`] for `d = 0, ..., max_d`, feeding each solution back.
pub fn solve_nh_chain(max_d: usize) -> Result<Vec<TPoly>, SeriesError> {
    let mut known: Vec<TPoly> = Vec::with_capacity(max_d + 1);
    for d in 0..=max_d {
        let next = solve_nh(d, &known)?;
        known.push(next);
    }
    Ok(known)
}

/// `q^{d²} t^d f(q^{-2d} t^{-1}) = f(t)`, i.e. `a_{d-i} = q^{d(d-2i)} a_i`.
pub fn functional_equation_check(d: usize, f: &TPoly) -> bool {
    if f.degree().is_some_and(|deg| deg > d) {
        return false;
    }
    let d = d as i64;
    (0..=d).all(|i| f.coeff((d - i) as usize) == f.coeff(i as usize).shift(d * (d - 2 * i)))
}

/// `NH_d(t; ζ_r) = (1 + t^r)^{d/r}` for the closed form, `r | d`.
pub fn root_of_unity_check(d: usize, r: u32) -> Result<bool, SeriesError> {
    if r == 0 || d % r as usize != 0 {
        return Err(SeriesError::NotDivisor { d, r });
    }
    let lhs = nh_guess(d).reduce_at_root_of_unity(r)?;
    let one_plus_tr = &TPoly::one() + &TPoly::monomial(LaurentPolyQ::one(), r as usize);
    let rhs = one_plus_tr.pow((d / r as usize) as u32);
    Ok(lhs == rhs)
}

/// `P_d(-1; q)` with `P_d = NH_d` for even `d` and `NH_d / (1 + q^d t)` for odd `d`.
pub fn p_at_minus_one(d: usize, nh: &TPoly) -> Result<LaurentPolyQ, SeriesError> {
    let p = if d % 2 == 1 {
        let factor = TPoly::from_coeffs(vec![LaurentPolyQ::one(), LaurentPolyQ::q_power(d as i64)]);
        nh.div_exact(&factor)?
    } else {
        nh.clone()
    };
    Ok(p.evaluate_t(&LaurentPolyQ::constant(-1)))
}

/// The divisor `Π_{odd r <= d} Φ_r(q)^{floor((d + r - 1) / (2r))}`.
pub fn cyclotomic_divisor(d: usize) -> Result<LaurentPolyQ, SeriesError> {
    let mut out = LaurentPolyQ::one();
    for r in (1..=d).step_by(2) {
        let e = (d + r - 1) / (2 * r);
        out = &out * &cyclotomic_polynomial(r as u32)?.pow(e as u32);
    }
    Ok(out)
}

/// Whether `P_d(-1; q)` of the closed form is divisible by [`cyclotomic_divisor`].
pub fn cyclotomic_divisibility_check(d: usize) -> Result<bool, SeriesError> {
    let value = p_at_minus_one(d, &nh_guess(d))?;
    Ok(value.div_exact(&cyclotomic_divisor(d)?).is_ok())
}
