//! `H_d(t)` assembled from Gröbner strata over the stable orbit decomposition.
//!
//! A stratum `Hilb(α)` has `|Hilb(α)| = A(α) B(α) D(α)` points, where
//! `A(α) = |V(α|_K)|`, `B(α) = q^{b(α)}` and `D(α) = q^{δ(α)}`; its content
//! is `Cont(α) = A(α) q^{b(α) + δ(α)} t^{n(α)}`.  Along a stable orbit with
//! generators `γ_{j_1}, ..., γ_{j_s}` each generator multiplies the content
//! by `q^{j-1} t`, so the orbit sums to `Cont(base) / Π (1 - q^{j-1} t)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use rayon::prelude::*;

use cusp_qalgebra::{t_pochhammer, LaurentPolyQ, TPoly, TSeries};
use cusp_strata::{stable_orbit_decomposition, Color, LeadingTermDatum, StableOrbit};
use cusp_varieties::{count_v_alpha, motive_v_alpha, VAlphaSpec};

use crate::SeriesError;

/// How the classes `A(α)` are obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Symbolic classes in `q` (tables for `d <= 3`, staircase motive for
    /// fully stable data).
    Symbolic,
    /// Point counts over `F_p`; the result is specialized at `q = p`.
    AtPrime(u64),
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Symbolic => write!(f, "symbolic"),
            Self::AtPrime(p) => write!(f, "p={p}"),
        }
    }
}

/// Computes `A(α)` with memoization by distance-class pattern.
#[derive(Debug)]
pub struct StratumClasses {
    mode: Mode,
    cache: Mutex<HashMap<VAlphaSpec, LaurentPolyQ>>,
}

impl StratumClasses {
    /// A fresh evaluator.
    pub fn new(mode: Mode) -> Self {
        Self { mode, cache: Mutex::new(HashMap::new()) }
    }

    /// The mode.
    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// `A(α) = [V(α|_K)]`, symbolic or as an integer at `q = p`.
    pub fn a_class(&self, alpha: &LeadingTermDatum) -> Result<LaurentPolyQ, SeriesError> {
        let spec = VAlphaSpec::of_k_part(alpha);
        if let Some(v) = self.cache.lock().expect("cache lock").get(&spec) {
            return Ok(v.clone());
        }
        let v = match self.mode {
            Mode::Symbolic => motive_v_alpha(&spec)?,
            Mode::AtPrime(p) => LaurentPolyQ::constant(count_v_alpha(&spec, p)?),
        };
        self.cache.lock().expect("cache lock").insert(spec, v.clone());
        Ok(v)
    }

    /// `Cont(α) = A(α) q^{b(α) + δ(α)} t^{n(α)}`; `q` stays symbolic in the
    /// factors `B` and `D` in both modes.
    pub fn content(&self, alpha: &LeadingTermDatum) -> Result<TPoly, SeriesError> {
        let (b, delta) = alpha.exponents();
        let coeff = self.a_class(alpha)?.shift(i64::from(b + delta));
        Ok(TPoly::monomial(coeff, alpha.n() as usize))
    }

    /// The orbit sum `Cont(base) / Π_{j ∈ gens} (1 - q^{j-1} t)` written over
    /// `(t;q)_d`: its numerator is `Cont(base) Π_{i ∉ gens - 1} (1 - q^i t)`.
    pub fn orbit_numerator(&self, orbit: &StableOrbit) -> Result<TPoly, SeriesError> {
        let d = orbit.base.d();
        let mut num = self.content(&orbit.base)?;
        for i in 0..d {
            if !orbit.generators.contains(&(i + 1)) {
                num = &num * &TPoly::from_coeffs(vec![LaurentPolyQ::one(), LaurentPolyQ::monomial(-1, i as i64)]);
            }
        }
        Ok(num)
    }
}

/// The numerator over `(t;q)_d` of the part of `H_d` coming from data with
/// rank-indexed colors `colors` (all colors when `None`), with `q` symbolic
/// in the `B`/`D` factors.
pub fn color_numerator(
    d: usize,
    colors: Option<&[Color]>,
    classes: &StratumClasses,
) -> Result<TPoly, SeriesError> {
    let orbits: Vec<StableOrbit> = stable_orbit_decomposition(d)
        .into_iter()
        .filter(|o| colors.is_none_or(|c| o.base.colors() == c))
        .collect();
    orbits
        .par_iter()
        .map(|o| classes.orbit_numerator(o))
        .try_reduce(TPoly::zero, |a, b| Ok(&a + &b))
}

/// `NH_d = (t;q)_d H_d`.  In [`Mode::AtPrime`] the result has integer
/// coefficients (specialized at `q = p`).
pub fn nh(d: usize, mode: Mode) -> Result<TPoly, SeriesError> {
    specialize(&nh_unspecialized(d, mode)?, mode)
}

/// `NH_d` before specializing `q`: in [`Mode::AtPrime`] the classes `A(α)`
/// are integers but the factors `B`, `D` keep `q` symbolic, so that
/// `q`-substitutions (as in the Quot series) can still be applied.
pub fn nh_unspecialized(d: usize, mode: Mode) -> Result<TPoly, SeriesError> {
    color_numerator(d, None, &StratumClasses::new(mode))
}

/// `H_d(t) = NH_d / (t;q)_d`.
pub fn hilb_series(d: usize, mode: Mode) -> Result<TSeries, SeriesError> {
    let den = specialize(&t_pochhammer(d as u32), mode)?;
    Ok(TSeries::new(nh(d, mode)?, den)?)
}

pub(crate) fn specialize(p: &TPoly, mode: Mode) -> Result<TPoly, SeriesError> {
    match mode {
        Mode::Symbolic => Ok(p.clone()),
        Mode::AtPrime(q) => Ok(p.specialize_q(&BigInt::from(q))?),
    }
}
