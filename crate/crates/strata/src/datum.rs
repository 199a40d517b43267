//! Leading-term data `α ∈ Ξ` and their monomial invariants.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use cusp_groebner::{CuspIdeal, Monomial};

use crate::levels::{distance_matrix, enumerate_levels, gamma, rank_order, stretches};
use crate::{DistanceMatrix, StrataError};

/// The two shapes of monomial ideal: principal `J` or two-generated `K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    /// `J(a) = (T^{a+1})`.
    J,
    /// `K(a) = (T^{a+2}, T^{a+3})`.
    K,
}

/// A leading-term datum: a seat-indexed level vector and a rank-indexed
/// color vector of the same length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeadingTermDatum {
    levels: Vec<u32>,
    colors: Vec<Color>,
}

impl LeadingTermDatum {
    /// Builds a datum from levels (by seat) and colors (by rank).
    pub fn new(levels: Vec<u32>, colors: Vec<Color>) -> Result<Self, StrataError> {
        if levels.len() != colors.len() {
            return Err(StrataError::LengthMismatch { levels: levels.len(), colors: colors.len() });
        }
        Ok(Self { levels, colors })
    }

    /// The datum `0_c`: all levels zero, colors `c` by rank.
    pub fn zero(colors: Vec<Color>) -> Self {
        Self { levels: vec![0; colors.len()], colors }
    }

    /// Builds a datum from seat-indexed ideals.
    pub fn from_ideals(ideals: &[CuspIdeal]) -> Result<Self, StrataError> {
        if ideals.iter().any(|i| !i.is_valid()) {
            return Err(StrataError::InvalidComponent);
        }
        let levels: Vec<u32> = ideals.iter().map(|i| i.level()).collect();
        let colors = rank_order(&levels)
            .into_iter()
            .map(|s| match ideals[s] {
                CuspIdeal::J(_) => Color::J,
                CuspIdeal::K(_) => Color::K,
            })
            .collect();
        Ok(Self { levels, colors })
    }

    /// The seat-indexed ideals `(I_1, ..., I_d)`.
    pub fn ideals(&self) -> Vec<CuspIdeal> {
        (0..self.d()).map(|s| self.ideal(s + 1)).collect()
    }

    /// The ideal at seat `i` (1-based).
    pub fn ideal(&self, i: usize) -> CuspIdeal {
        let l = self.levels[i - 1];
        match self.seat_color(i) {
            Color::J => CuspIdeal::J(l + 1),
            Color::K => CuspIdeal::K(l),
        }
    }

    /// The rank `d`.
    pub fn d(&self) -> usize {
        self.levels.len()
    }

    /// Levels by seat.
    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    /// Colors by rank.
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Seats (1-based) in rank order.
    pub fn ranked_seats(&self) -> Vec<usize> {
        rank_order(&self.levels).into_iter().map(|s| s + 1).collect()
    }

    /// The color of the component at seat `i` (1-based).
    pub fn seat_color(&self, i: usize) -> Color {
        let r = rank_order(&self.levels).iter().position(|&s| s == i - 1).expect("seat in range");
        self.colors[r]
    }

    /// `n(α) = Σ levels + #J = dim mF / M_α`.
    pub fn n(&self) -> u32 {
        self.levels.iter().sum::<u32>() + self.colors.iter().filter(|c| **c == Color::J).count() as u32
    }

    /// `μ_i^0 = T^{l_i + 2} u_i`, the smaller corner at seat `i` (1-based).
    pub fn mu0(&self, i: usize) -> Monomial {
        Monomial::new(self.levels[i - 1] + 2, i as u32)
    }

    /// `μ_i^1 = T^{l_i + 3} u_i` for a `K` component, `None` for `J`.
    pub fn mu1(&self, i: usize) -> Option<Monomial> {
        (self.seat_color(i) == Color::K).then(|| Monomial::new(self.levels[i - 1] + 3, i as u32))
    }

    /// The corners `C(α)`: the minimal monomial generators of `M_α`.
    pub fn corners(&self) -> BTreeSet<Monomial> {
        (1..=self.d())
            .flat_map(|i| self.ideal(i).generators().into_iter().map(move |k| Monomial::new(k, i as u32)))
            .collect()
    }

    /// The standard set `Δ(α)`: monomials of `mF` outside `M_α`.
    pub fn standard_set(&self) -> BTreeSet<Monomial> {
        (1..=self.d())
            .flat_map(|i| {
                self.ideal(i).standard_exponents().into_iter().map(move |k| Monomial::new(k, i as u32))
            })
            .collect()
    }

    /// Applies `γ_j` to the levels, keeping the rank-indexed colors.
    pub fn gamma(&self, j: usize) -> Self {
        Self { levels: gamma(j, &self.levels), colors: self.colors.clone() }
    }

    /// The distance matrix of the level vector.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        distance_matrix(&self.levels)
    }

    /// `(b(α), δ(α))` with `B(α) = q^{b(α)}` and `D(α) = q^{δ(α)}`.
    ///
    /// `b(α) = Σ_{i ∈ K} |C(α|_J)_{≻ μ_i^0}|` and
    /// `δ(α) = Σ_i |Δ(α)_{≻ μ_i^0}|`, both counted directly from monomials.
    pub fn exponents(&self) -> (u32, u32) {
        let d = self.d();
        let j_corners: Vec<Monomial> =
            (1..=d).filter(|&i| self.seat_color(i) == Color::J).map(|i| self.mu0(i)).collect();
        let b = (1..=d)
            .filter(|&i| self.seat_color(i) == Color::K)
            .map(|i| j_corners.iter().filter(|m| **m > self.mu0(i)).count() as u32)
            .sum();
        let delta_set = self.standard_set();
        let delta = (1..=d)
            .map(|i| delta_set.iter().filter(|m| **m > self.mu0(i)).count() as u32)
            .sum();
        (b, delta)
    }

    /// Stability under `γ_j`: for every stretch-eligible pair `b < j <= h`,
    /// `c_b = J` forces `δ_bh >= 1`, and `c_b = c_h = K` forces `δ_bh >= 3`.
    pub fn is_stable(&self, j: usize) -> bool {
        let dm = self.distance_matrix();
        (1..j).all(|b| {
            (j..=self.d()).all(|h| {
                let dist = dm.get(b, h);
                match (self.colors[b - 1], self.colors[h - 1]) {
                    (Color::J, _) => dist >= 1,
                    (Color::K, Color::K) => dist >= 3,
                    (Color::K, Color::J) => true,
                }
            })
        })
    }

    /// The stretches of `γ_j` on the level vector.
    pub fn stretches(&self, j: usize) -> BTreeSet<(usize, usize)> {
        stretches(j, &self.levels)
    }

    /// Seats (1-based, increasing) of the `K`-colored components.
    pub fn k_seats(&self) -> Vec<usize> {
        (1..=self.d()).filter(|&i| self.seat_color(i) == Color::K).collect()
    }

    /// Whether every component has color `K`.
    pub fn is_pure_k(&self) -> bool {
        self.colors.iter().all(|c| *c == Color::K)
    }
}

/// All data of rank `d` with `n(α) = n`, in a deterministic order.
pub fn enumerate_data(d: usize, n: u32) -> Vec<LeadingTermDatum> {
    let mut out = Vec::new();
    for mask in 0..(1u32 << d) {
        let colors: Vec<Color> =
            (0..d).map(|r| if mask >> r & 1 == 1 { Color::J } else { Color::K }).collect();
        let num_j = mask.count_ones();
        if num_j > n {
            continue;
        }
        for levels in enumerate_levels(d, n - num_j) {
            out.push(LeadingTermDatum { levels, colors: colors.clone() });
        }
    }
    out.sort();
    out
}

impl fmt::Display for LeadingTermDatum {
    /// The seat-indexed form, e.g. `(K(1),J(1),K(0))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, ideal) in self.ideals().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{ideal}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for LeadingTermDatum {
    type Err = StrataError;

    fn from_str(s: &str) -> Result<Self, StrataError> {
        let bad = || StrataError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact.strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let mut ideals = Vec::new();
        if !inner.is_empty() {
            for part in inner.split("),") {
                let part = part.strip_suffix(')').unwrap_or(part);
                let (kind, arg) = part.split_once('(').ok_or_else(bad)?;
                let a: u32 = arg.parse().map_err(|_| bad())?;
                ideals.push(match kind {
                    "J" => CuspIdeal::J(a),
                    "K" => CuspIdeal::K(a),
                    _ => return Err(bad()),
                });
            }
        }
        Self::from_ideals(&ideals)
    }
}
