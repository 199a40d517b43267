//! Point counts of `V(α)` and `V_d` over `F_p`.
//!
//! The enumeration runs over `Y` on its allowed support; for each `Y` the
//! commutation `XY = YX` is a linear condition on the allowed entries of `X`,
//! so only the solution space of that system is searched for `X² = Y³`.

use rayon::prelude::*;

use cusp_groebner::PrimeField;

use crate::{GfMatrix, VAlphaSpec, VarietyError};

/// An upper bound on the number of candidate pairs an enumeration may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum of `p^{#free Y entries + #free X entries}`.
    pub max_candidates: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Self { max_candidates: 1 << 32 }
    }
}

impl Budget {
    /// Fails if `p^exponent` exceeds the budget.
    pub fn check(&self, p: u64, exponent: usize) -> Result<(), VarietyError> {
        let needed = (p as u128).checked_pow(exponent as u32).unwrap_or(u128::MAX);
        if needed > self.max_candidates {
            return Err(VarietyError::BudgetExceeded { needed, budget: self.max_candidates });
        }
        Ok(())
    }
}

pub(crate) fn field(p: u64) -> Result<PrimeField, VarietyError> {
    PrimeField::new(p).map_err(|_| VarietyError::BadPrime(p))
}

/// `|V(α)(F_p)|` with the default budget.
pub fn count_v_alpha(spec: &VAlphaSpec, p: u64) -> Result<u64, VarietyError> {
    count_v_alpha_with_budget(spec, p, Budget::default())
}

/// `|V(α)(F_p)|`, failing if the search space exceeds `budget`.
pub fn count_v_alpha_with_budget(
    spec: &VAlphaSpec,
    p: u64,
    budget: Budget,
) -> Result<u64, VarietyError> {
    let f = field(p)?;
    let ys = spec.y_support();
    budget.check(p, ys.len() + spec.x_support().len())?;
    let total = (p as u128).pow(ys.len() as u32) as u64;
    Ok((0..total)
        .into_par_iter()
        .map(|index| {
            let y = matrix_from_index(f, spec.d(), &ys, index);
            let mut n = 0u64;
            for_each_x(spec, &y, |_| n += 1);
            n
        })
        .sum())
}

/// All points of `V(α)(F_p)` in a deterministic order.
pub fn v_alpha_points(
    spec: &VAlphaSpec,
    p: u64,
    budget: Budget,
) -> Result<Vec<(GfMatrix, GfMatrix)>, VarietyError> {
    let f = field(p)?;
    let ys = spec.y_support();
    budget.check(p, ys.len() + spec.x_support().len())?;
    let total = (p as u128).pow(ys.len() as u32) as u64;
    let mut out = Vec::new();
    for index in 0..total {
        let y = matrix_from_index(f, spec.d(), &ys, index);
        for_each_x(spec, &y, |x| out.push((x.clone(), y.clone())));
    }
    Ok(out)
}

/// `|V_d(F_p)|`: strictly upper triangular pairs with `X² = Y³`, `XY = YX`.
pub fn brute_v_d(d: usize, p: u64) -> Result<u64, VarietyError> {
    count_v_alpha(&VAlphaSpec::stable(d), p)
}

/// `|V_d(F_p)|` under an explicit budget.
pub fn brute_v_d_with_budget(d: usize, p: u64, budget: Budget) -> Result<u64, VarietyError> {
    count_v_alpha_with_budget(&VAlphaSpec::stable(d), p, budget)
}

/// The matrix with entries on `support` given by the base-`p` digits of `index`.
pub(crate) fn matrix_from_index(
    f: PrimeField,
    d: usize,
    support: &[(usize, usize)],
    mut index: u64,
) -> GfMatrix {
    let mut m = GfMatrix::zeros(f, d, d);
    for &(i, j) in support {
        m.set(i, j, index % f.p());
        index /= f.p();
    }
    m
}

/// Calls `visit` on every `X` with `(X, Y) ∈ V(α)`.
fn for_each_x(spec: &VAlphaSpec, y: &GfMatrix, mut visit: impl FnMut(&GfMatrix)) {
    let f = y.field();
    let d = spec.d();
    let xs = spec.x_support();
    // Column v of the system: the commutator [E_v, Y] for the unit matrix E_v.
    let columns: Vec<Vec<u64>> = xs
        .iter()
        .map(|&(i, j)| {
            let mut e = GfMatrix::zeros(f, d, d);
            e.set(i, j, 1);
            let c = &(&e * y) - &(y * &e);
            (0..d * d).map(|k| c.get(k / d, k % d)).collect()
        })
        .collect();
    let system = GfMatrix::from_columns(f, d * d, &columns);
    let kernel = system.kernel();
    let y3 = y.pow(3);
    let count = f.p().pow(kernel.len() as u32);
    for index in 0..count {
        let mut coeffs = vec![0u64; xs.len()];
        let mut rest = index;
        for v in &kernel {
            let c = rest % f.p();
            rest /= f.p();
            for (k, x) in coeffs.iter_mut().enumerate() {
                *x = f.add(*x, f.mul(c, v[k]));
            }
        }
        let mut x = GfMatrix::zeros(f, d, d);
        for (&(i, j), &c) in xs.iter().zip(&coeffs) {
            x.set(i, j, c);
        }
        if &x * &x == y3 {
            visit(&x);
        }
    }
}
