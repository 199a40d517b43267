//! Conversions between `H_d`, `Q_d` and the Cohen–Lenstra series `ẑ`.

use cusp_qalgebra::{
    binomial2, q_binomial, q_binomial_inv, q_pochhammer_inv, t_pochhammer, RationalQ, TPoly,
    TSeries,
};

use crate::hilb::{nh_unspecialized, specialize, Mode};
use crate::SeriesError;

/// `NQ_d = Σ_r [d r]_q t^r NH_r(t q^{d-r}) (t;q)_{d-r}` from `NH_0, ..., NH_d`
/// (symbolic in `q`).
pub fn nq_from_nh(nhs: &[TPoly]) -> Result<TPoly, SeriesError> {
    let d = nhs.len().checked_sub(1).ok_or(SeriesError::MissingRanks { needed: 0, got: 0 })?;
    let mut out = TPoly::zero();
    for (r, nh_r) in nhs.iter().enumerate() {
        let shift = (d - r) as i64;
        let term = &nh_r.substitute(shift, 1) * &t_pochhammer((d - r) as u32);
        out = &out + &term.scale(&q_binomial(d as i64, r as i64)?).shift_t(r);
    }
    Ok(out)
}

/// `NQ_d` in the given mode.
pub fn nq(d: usize, mode: Mode) -> Result<TPoly, SeriesError> {
    let nhs = (0..=d).map(|r| nh_unspecialized(r, mode)).collect::<Result<Vec<_>, _>>()?;
    specialize(&nq_from_nh(&nhs)?, mode)
}

/// `Q_d(t) = NQ_d / (t;q)_d`.
pub fn quot_series(d: usize, mode: Mode) -> Result<TSeries, SeriesError> {
    let den = specialize(&t_pochhammer(d as u32), mode)?;
    Ok(TSeries::new(nq(d, mode)?, den)?)
}

/// The inversion `H_d = t^{-d} Σ_r (-1)^{d-r} q^{-C(d-r,2)} [d r]_{q^-1} Q_r(t q^{d-r})`
/// from symbolic `Q_0, ..., Q_d`, returned over `(t;q)_d`.
pub fn hilb_from_quot(quots: &[TSeries]) -> Result<TSeries, SeriesError> {
    let d = quots.len().checked_sub(1).ok_or(SeriesError::MissingRanks { needed: 0, got: 0 })?;
    let common = t_pochhammer(d as u32);
    let mut num = TPoly::zero();
    for (r, q_r) in quots.iter().enumerate() {
        let k = (d - r) as i64;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let coeff = q_binomial_inv(d as i64, r as i64)?.shift(-binomial2(k)).scale(&sign.into());
        let term = q_r.substitute(k, 1).with_denominator(&common)?;
        num = &num + &term.numerator().scale(&coeff);
    }
    let num = num.unshift_t(d).map_err(|_| SeriesError::NotPolynomial(format!("t^-{d} Σ ...")))?;
    Ok(TSeries::new(num, common)?)
}

/// `[t^n] ẑ = Σ_{d=0}^{n} q^{-d² - d(n-d)} [t^{n-d}] H_d / (q^-1; q^-1)_d`
/// for `n = 0, ..., n_max`, from `H_0, ..., H_{n_max}` (symbolic in `q`).
pub fn zhat_from_hilb(hilbs: &[TSeries], n_max: usize) -> Result<Vec<RationalQ>, SeriesError> {
    if hilbs.len() <= n_max {
        return Err(SeriesError::MissingRanks { needed: n_max, got: hilbs.len().saturating_sub(1) });
    }
    let expansions =
        hilbs.iter().take(n_max + 1).map(|h| h.expand(n_max)).collect::<Result<Vec<_>, _>>()?;
    (0..=n_max)
        .map(|n| {
            let mut acc = RationalQ::zero();
            for (d, exp) in expansions.iter().enumerate().take(n + 1) {
                let (d, m) = (d as i64, (n - d) as i64);
                let num = exp[m as usize].shift(-d * d - d * m);
                acc = &acc + &RationalQ::new(num, q_pochhammer_inv(d as u32))?;
            }
            Ok(acc)
        })
        .collect()
}

/// `[t^n] ẑ` for `n <= n_max`.
///
/// In [`Mode::AtPrime`] the classes `A(α)` are point counts, so the returned
/// rational functions are only meaningful after evaluating at `q = p`.
pub fn zhat_truncation(n_max: usize, mode: Mode) -> Result<Vec<RationalQ>, SeriesError> {
    let hilbs = (0..=n_max)
        .map(|d| Ok(TSeries::new(nh_unspecialized(d, mode)?, t_pochhammer(d as u32))?))
        .collect::<Result<Vec<_>, SeriesError>>()?;
    zhat_from_hilb(&hilbs, n_max)
}
