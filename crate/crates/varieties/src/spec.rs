//! The zero pattern of `V(α)` in terms of truncated distance classes.

use std::fmt;

use cusp_strata::{Color, LeadingTermDatum};

use crate::VarietyError;

/// A pairwise distance truncated to what the defining equations can see.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DistanceClass {
    /// `δ <= 1`: both `X_ij` and `Y_ij` vanish.
    AtMostOne,
    /// `δ = 2`: `X_ij` vanishes, `Y_ij` is free.
    Two,
    /// `δ >= 3`: both entries are free.
    AtLeastThree,
}

impl DistanceClass {
    /// The class of a distance.
    pub fn of(distance: u32) -> Self {
        match distance {
            0 | 1 => Self::AtMostOne,
            2 => Self::Two,
            _ => Self::AtLeastThree,
        }
    }

    /// A representative distance of the class.
    pub fn representative(self) -> u32 {
        match self {
            Self::AtMostOne => 1,
            Self::Two => 2,
            Self::AtLeastThree => 3,
        }
    }
}

impl fmt::Display for DistanceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::AtMostOne => "1-",
            Self::Two => "2",
            Self::AtLeastThree => "3+",
        })
    }
}

/// The variety `V(α)` for a pure-`K` datum of rank `d`, in rank indexing:
/// strictly upper triangular `X, Y` with `X² = Y³`, `XY = YX`, `X_ij = 0`
/// when `δ_ij < 3` and `Y_ij = 0` when `δ_ij < 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VAlphaSpec {
    d: usize,
    /// Classes of the pairs `(i, j)`, `i < j`, in lexicographic order.
    classes: Vec<DistanceClass>,
}

impl VAlphaSpec {
    /// The spec with the given classes for the pairs `(1,2), (1,3), ..., (d-1,d)`
    /// in lexicographic order.
    pub fn from_classes(d: usize, classes: Vec<DistanceClass>) -> Result<Self, VarietyError> {
        let expected = d * d.saturating_sub(1) / 2;
        if classes.len() != expected {
            return Err(VarietyError::ClassCount { d, expected, got: classes.len() });
        }
        Ok(Self { d, classes })
    }

    /// The fully stable spec: every distance at least 3, i.e. `V_d` itself.
    pub fn stable(d: usize) -> Self {
        Self { d, classes: vec![DistanceClass::AtLeastThree; d * d.saturating_sub(1) / 2] }
    }

    /// The spec of a pure-`K` datum.
    pub fn from_datum(alpha: &LeadingTermDatum) -> Result<Self, VarietyError> {
        if !alpha.is_pure_k() {
            return Err(VarietyError::NotPureK(alpha.to_string()));
        }
        Ok(Self::of_k_part(alpha))
    }

    /// The spec of the restriction `α|_K` to the `K`-colored components.
    ///
    /// Distances are intrinsic to the corner monomials, so they are computed
    /// from the original levels and seats of the `K` components.
    pub fn of_k_part(alpha: &LeadingTermDatum) -> Self {
        let levels = alpha.levels();
        let seats: Vec<usize> = alpha
            .ranked_seats()
            .into_iter()
            .zip(alpha.colors())
            .filter(|(_, c)| **c == Color::K)
            .map(|(s, _)| s - 1)
            .collect();
        let d = seats.len();
        let mut classes = Vec::with_capacity(d * d.saturating_sub(1) / 2);
        for b in 0..d {
            for h in b + 1..d {
                let (sb, sh) = (seats[b], seats[h]);
                let dist = levels[sh] - levels[sb] - u32::from(sh < sb);
                classes.push(DistanceClass::of(dist));
            }
        }
        Self { d, classes }
    }

    /// The rank `d`.
    pub fn d(&self) -> usize {
        self.d
    }

    /// All classes in lexicographic pair order.
    pub fn classes(&self) -> &[DistanceClass] {
        &self.classes
    }

    /// The class of the pair `(i, j)`, `1 <= i < j <= d`.
    pub fn class(&self, i: usize, j: usize) -> DistanceClass {
        assert!(1 <= i && i < j && j <= self.d, "pair ({i},{j}) out of range");
        // Pairs before row i: Σ_{r < i} (d - r).
        let row_start: usize = (1..i).map(|r| self.d - r).sum();
        self.classes[row_start + (j - i - 1)]
    }

    /// 0-based positions `(i, j)` where `X` may be nonzero.
    pub fn x_support(&self) -> Vec<(usize, usize)> {
        self.support(DistanceClass::AtLeastThree)
    }

    /// 0-based positions `(i, j)` where `Y` may be nonzero.
    pub fn y_support(&self) -> Vec<(usize, usize)> {
        self.support(DistanceClass::Two)
    }

    fn support(&self, min: DistanceClass) -> Vec<(usize, usize)> {
        (1..=self.d)
            .flat_map(|i| (i + 1..=self.d).map(move |j| (i, j)))
            .filter(|&(i, j)| self.class(i, j) >= min)
            .map(|(i, j)| (i - 1, j - 1))
            .collect()
    }

    /// Whether every class is `3+`, so that `V(α) = V_d`.
    pub fn is_fully_stable(&self) -> bool {
        self.classes.iter().all(|c| *c == DistanceClass::AtLeastThree)
    }
}

impl fmt::Display for VAlphaSpec {
    /// Classes as `(δ12,δ23,δ13)` for `d = 3`, lexicographic otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = if self.d == 3 {
            [(1, 2), (2, 3), (1, 3)].iter().map(|&(i, j)| self.class(i, j).to_string()).collect()
        } else {
            self.classes.iter().map(ToString::to_string).collect()
        };
        write!(f, "({})", parts.join(","))
    }
}
