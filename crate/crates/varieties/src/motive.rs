//! The motives `[V_(a,b)]` of the strata of `V_d` by `(dim ker A, rank A)`.

use std::collections::BTreeMap;
use std::fmt::Write;

use cusp_qalgebra::LaurentPolyQ;

/// The classes `[V_(a,b)]` for all `a + b <= 2 max_d`, computed by the
/// recursion
///
/// `[V_(a,b)] = q^b [V_(a-2,b)] + (q^((a+b-2)/2) - q^(b-1)) [V_(a-1,b-1)]
///            + (q^a - q^((a+b-2)/2)) [V_(a,b-2)]`
///
/// from `[V_(0,0)] = 1`, with `[V_(a,b)] = 0` unless `a >= b >= 0` and
/// `a ≡ b (mod 2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotiveTable {
    max_d: usize,
    entries: BTreeMap<(u32, u32), LaurentPolyQ>,
}

fn on_cone(a: i64, b: i64) -> bool {
    a >= b && b >= 0 && (a - b) % 2 == 0
}

impl MotiveTable {
    /// Computes every stratum with `a + b <= 2 max_d`.
    pub fn new(max_d: usize) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert((0, 0), LaurentPolyQ::one());
        for d in 1..=max_d as i64 {
            for b in 0..=d {
                let a = 2 * d - b;
                if !on_cone(a, b) {
                    continue;
                }
                let get = |a: i64, b: i64| -> Option<&LaurentPolyQ> {
                    on_cone(a, b).then(|| entries.get(&(a as u32, b as u32))).flatten()
                };
                let q = LaurentPolyQ::q_power;
                let mid = d - 1;
                let mut v = LaurentPolyQ::zero();
                if let Some(x) = get(a - 2, b) {
                    v = &v + &(&q(b) * x);
                }
                if let Some(x) = get(a - 1, b - 1) {
                    v = &v + &(&(&q(mid) - &q(b - 1)) * x);
                }
                if let Some(x) = get(a, b - 2) {
                    v = &v + &(&(&q(a) - &q(mid)) * x);
                }
                entries.insert((a as u32, b as u32), v);
            }
        }
        Self { max_d, entries }
    }

    /// The largest `d` covered.
    pub fn max_d(&self) -> usize {
        self.max_d
    }

    /// `[V_(a,b)]`; zero off the cone.
    ///
    /// # Panics
    ///
    /// Panics if `a + b > 2 max_d`.
    pub fn get(&self, a: u32, b: u32) -> LaurentPolyQ {
        assert!((a + b) as usize <= 2 * self.max_d, "V_({a},{b}) beyond the computed range");
        self.entries.get(&(a, b)).cloned().unwrap_or_else(LaurentPolyQ::zero)
    }

    /// `[V_d] = Σ_{b=0}^{d} [V_(2d-b, b)]`.
    pub fn motive(&self, d: usize) -> LaurentPolyQ {
        (0..=d as u32).fold(LaurentPolyQ::zero(), |acc, b| &acc + &self.get(2 * d as u32 - b, b))
    }

    /// CSV rows `a,b,motive` for every nonzero stratum, with a header.
    pub fn strata_csv(&self) -> String {
        let mut out = String::from("a,b,motive\n");
        for ((a, b), v) in &self.entries {
            writeln!(out, "{a},{b},{v}").unwrap();
        }
        out
    }

    /// CSV rows `d,motive` for `0 <= d <= max_d`, with a header.
    pub fn motive_csv(&self) -> String {
        let mut out = String::from("d,motive\n");
        for d in 0..=self.max_d {
            writeln!(out, "{d},{}", self.motive(d)).unwrap();
        }
        out
    }
}

/// The motive `[V_d]` of the staircase variety.
pub fn staircase_motive(d: usize) -> LaurentPolyQ {
    MotiveTable::new(d).motive(d)
}
