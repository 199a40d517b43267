//! The canonical stable orbit decomposition of `Ξ`.

use crate::levels::apply_address;
use crate::{Color, LeadingTermDatum};

/// One orbit `{γ^k · base : k ∈ N^generators}` of the decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableOrbit {
    /// The base datum `b · 0_c`.
    pub base: LeadingTermDatum,
    /// The box element `b` (with `b_1 = 0`).
    pub box_index: Vec<u32>,
    /// The generating operators `j` (1-based), always including `1` when `d >= 1`.
    pub generators: Vec<usize>,
}

impl StableOrbit {
    /// Whether `alpha` belongs to this orbit (compared via orbit addresses).
    pub fn contains(&self, alpha: &LeadingTermDatum) -> bool {
        if alpha.colors() != self.base.colors() {
            return false;
        }
        let a = crate::orbit_address(alpha.levels());
        a.iter().zip(&self.box_index).enumerate().all(|(j, (&aj, &bj))| {
            if self.generators.contains(&(j + 1)) {
                aj >= bj
            } else {
                aj == bj
            }
        })
    }
}

/// The box edge `3(d - j + 1)`: `γ_j` is a generator once `b_j` reaches it.
pub fn box_generator_bound(d: usize, j: usize) -> u32 {
    3 * (d - j + 1) as u32
}

/// Number of orbits: `2^d · Π_{j=2}^{d} (3(d - j + 1) + 1)`.
pub fn orbit_count(d: usize) -> u64 {
    (2..=d).fold(1u64 << d, |acc, j| acc * (u64::from(box_generator_bound(d, j)) + 1))
}

/// The canonical stable orbit decomposition of all data of rank `d`.
///
/// For each rank-indexed color vector `c` and each `b` in the box
/// `{(0, b_2, ..., b_d) : 0 <= b_j <= 3(d - j + 1)}`, emits the base `b · 0_c`
/// with generators `{γ_1} ∪ {γ_j : b_j = 3(d - j + 1)}`.  Every generator is
/// stable on its whole orbit, and the orbits partition `Ξ`.
pub fn stable_orbit_decomposition(d: usize) -> Vec<StableOrbit> {
    let mut boxes: Vec<Vec<u32>> = vec![vec![0; d.min(1)]];
    for j in 2..=d {
        boxes = boxes
            .into_iter()
            .flat_map(|b| {
                (0..=box_generator_bound(d, j)).map(move |v| {
                    let mut b = b.clone();
                    b.push(v);
                    b
                })
            })
            .collect();
    }
    let mut out = Vec::with_capacity(orbit_count(d) as usize);
    for mask in 0..(1u32 << d) {
        let colors: Vec<Color> =
            (0..d).map(|r| if mask >> r & 1 == 1 { Color::J } else { Color::K }).collect();
        for b in &boxes {
            let base = LeadingTermDatum::new(apply_address(b), colors.clone())
                .expect("lengths agree");
            let generators = (1..=d)
                .filter(|&j| j == 1 || b[j - 1] == box_generator_bound(d, j))
                .collect();
            out.push(StableOrbit { base, box_index: b.clone(), generators });
        }
    }
    out
}
