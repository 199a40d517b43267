//! Counting Gröbner strata by enumerating reduced prebases.
//!
//! A submodule with leading submodule `M_α` has a unique reduced Gröbner
//! basis: one generator `μ + Σ c_ν ν` per corner `μ` of `M_α`, with tail
//! monomials `ν` running over the standard set `Δ(α)` strictly above `μ`.
//! The oracle enumerates all tail coefficients and keeps the prebases that
//! pass the Gröbner test.

use cusp_groebner::{is_groebner, Element, Monomial, PreBasis, PrimeField};
use cusp_strata::LeadingTermDatum;
use rayon::prelude::*;

use crate::{Budget, OracleError};

/// One generator of the reduced basis: its corner and its free tail monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorShape {
    /// The leading monomial.
    pub corner: Monomial,
    /// `Δ(α)_{≻ corner}`, increasing.
    pub tail: Vec<Monomial>,
}

/// The generators of a reduced basis with leading submodule `M_α`, sorted by
/// corner.
pub fn stratum_shape(alpha: &LeadingTermDatum) -> Vec<GeneratorShape> {
    let standard = alpha.standard_set();
    alpha
        .corners()
        .into_iter()
        .map(|corner| GeneratorShape {
            corner,
            tail: standard.iter().copied().filter(|m| *m > corner).collect(),
        })
        .collect()
}

/// Truncation `T^{2n+4}`: every submodule of colength `n` contains `T^{2n+2} F`.
fn truncation(alpha: &LeadingTermDatum) -> u32 {
    2 * alpha.n() + 4
}

/// `|Hilb(α)(F_p)|`: submodules of `mF` whose leading submodule is `M_α`.
pub fn count_stratum_bruteforce(alpha: &LeadingTermDatum, p: u64) -> Result<u64, OracleError> {
    count_stratum_pinned(alpha, p, &[], Budget::default())
}

/// [`count_stratum_bruteforce`] with an explicit budget.
pub fn count_stratum_bruteforce_with_budget(
    alpha: &LeadingTermDatum,
    p: u64,
    budget: Budget,
) -> Result<u64, OracleError> {
    count_stratum_pinned(alpha, p, &[], budget)
}

/// `|Hilb⁰(α)(F_p)|`: the central stratum, where every `g_i^0` equals its
/// corner `μ_i^0`.
pub fn count_central_stratum(alpha: &LeadingTermDatum, p: u64) -> Result<u64, OracleError> {
    let pins: Vec<(Monomial, Vec<u64>)> = (1..=alpha.d())
        .map(|i| {
            let mu = alpha.mu0(i);
            let len = stratum_shape(alpha).iter().find(|g| g.corner == mu).map_or(0, |g| g.tail.len());
            (mu, vec![0; len])
        })
        .collect();
    count_stratum_pinned(alpha, p, &pins, Budget::default())
}

/// Counts reduced Gröbner bases of `Hilb(α)` whose generators at the pinned
/// corners have the given tail coefficients (in the order of
/// [`GeneratorShape::tail`]); the other generators are free.
pub fn count_stratum_pinned(
    alpha: &LeadingTermDatum,
    p: u64,
    pins: &[(Monomial, Vec<u64>)],
    budget: Budget,
) -> Result<u64, OracleError> {
    let field = PrimeField::new(p)?;
    let shape = stratum_shape(alpha);
    for (corner, coeffs) in pins {
        let g = shape
            .iter()
            .find(|g| g.corner == *corner)
            .ok_or_else(|| OracleError::BadPin(format!("{corner} is not a corner of {alpha}")))?;
        if coeffs.len() != g.tail.len() {
            return Err(OracleError::BadPin(format!(
                "{corner} has {} tail monomials, got {} coefficients",
                g.tail.len(),
                coeffs.len()
            )));
        }
    }
    let pinned = |corner: Monomial| pins.iter().find(|(c, _)| *c == corner).map(|(_, v)| v);
    let free: usize =
        shape.iter().filter(|g| pinned(g.corner).is_none()).map(|g| g.tail.len()).sum();
    let total = (p as u128).saturating_pow(free as u32);
    budget.check(total)?;
    let trunc = truncation(alpha);
    let count = (0..total as u64)
        .into_par_iter()
        .filter(|&idx| {
            let mut rest = idx;
            let elements: Vec<Element> = shape
                .iter()
                .map(|g| {
                    let coeffs: Vec<u64> = match pinned(g.corner) {
                        Some(v) => v.clone(),
                        None => (0..g.tail.len())
                            .map(|_| {
                                let c = rest % p;
                                rest /= p;
                                c
                            })
                            .collect(),
                    };
                    let terms = std::iter::once((g.corner, 1))
                        .chain(g.tail.iter().zip(&coeffs).map(|(m, c)| (*m, *c as i64)));
                    Element::from_terms(field, trunc, terms).expect("monomials lie in mF")
                })
                .collect();
            let basis = PreBasis::new(elements).expect("tails avoid the leading submodule");
            is_groebner(&basis)
        })
        .count();
    Ok(count as u64)
}
