//! The operators `A`, `A'`, `T` on `M ⊕ M` for a point `(X, Y)` of `V_d`, and
//! the dimensions that stratify `V_d`.
//!
//! `M = k^d` is a module over `k[[x, y]]/(x² - y³)` via `x ↦ X`, `y ↦ Y`, and
//!
//! ```text
//! A = [[X, -Y²], [-Y, X]],   A' = [[X, Y²], [Y, X]],   T = [[0, Y], [1, 0]].
//! ```
//!
//! `A A' = A' A = 0` and `T` commutes with both, giving the filtration
//! `W⁰ = im A' ⊆ W¹ = {u ∈ ker A : T u ∈ im A'} ⊆ W² = ker A`.

use crate::{GfMatrix, VarietyError};

/// Kernel, image and filtration dimensions at a point of `V_d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AbProfile {
    /// `dim ker A`.
    pub a: usize,
    /// `dim im A`.
    pub b: usize,
    /// `dim W⁰ = dim im A'`.
    pub w0: usize,
    /// `dim W¹`.
    pub w1: usize,
    /// `dim W² = dim ker A`.
    pub w2: usize,
    /// `dim ker A'`.
    pub ker_a_prime: usize,
    /// Rank of the map induced by `T` on `H⁰ = ker A / im A'`.
    pub h0_image_t: usize,
    /// Nullity of the map induced by `T` on `H⁰`.
    pub h0_kernel_t: usize,
}

impl AbProfile {
    /// The identities expected at every point: `a + b = 2d`,
    /// `w0 = b`, `w2 = a`, `w1 = (a + b)/2`, `dim ker A' = a`, and exactness
    /// `im T = ker T` on `H⁰`.
    pub fn satisfies_identities(&self, d: usize) -> bool {
        self.a + self.b == 2 * d
            && self.w0 == self.b
            && self.w2 == self.a
            && 2 * self.w1 == self.a + self.b
            && self.ker_a_prime == self.a
            && self.h0_image_t == self.h0_kernel_t
    }
}

/// Where a kernel vector `u = (z, w)` of `A` sits in the filtration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtensionCase {
    /// `u ∈ W⁰`.
    W0,
    /// `u ∈ W¹ \ W⁰`.
    W1,
    /// `u ∈ W² \ W¹`.
    W2,
}

impl ExtensionCase {
    /// The change of `(a, b)` when appending the column pair `(z, w)`.
    pub fn shift(self) -> (usize, usize) {
        match self {
            Self::W0 => (2, 0),
            Self::W1 => (1, 1),
            Self::W2 => (0, 2),
        }
    }
}

/// The operators `A`, `A'` and `T` of a point of `V_d`.
#[derive(Clone, Debug)]
pub struct StaircaseOperators {
    /// `[[X, -Y²], [-Y, X]]`.
    pub a: GfMatrix,
    /// `[[X, Y²], [Y, X]]`.
    pub a_prime: GfMatrix,
    /// `[[0, Y], [1, 0]]`.
    pub t: GfMatrix,
}

/// Whether `(X, Y)` is a point of `V_d`.
pub fn is_on_v_d(x: &GfMatrix, y: &GfMatrix) -> bool {
    x.rows() == y.rows()
        && x.field() == y.field()
        && x.is_strictly_upper()
        && y.is_strictly_upper()
        && &(x * x) == &y.pow(3)
        && &(x * y) == &(y * x)
}

impl StaircaseOperators {
    /// Builds the operators, checking that `(X, Y) ∈ V_d`.
    pub fn new(x: &GfMatrix, y: &GfMatrix) -> Result<Self, VarietyError> {
        if !is_on_v_d(x, y) {
            return Err(VarietyError::NotOnVariety);
        }
        let f = x.field();
        let d = x.rows();
        let y2 = y * y;
        let zero = GfMatrix::zeros(f, d, d);
        Ok(Self {
            a: GfMatrix::block(x, &-&y2, &-y, x),
            a_prime: GfMatrix::block(x, &y2, y, x),
            t: GfMatrix::block(&zero, y, &GfMatrix::identity(f, d), &zero),
        })
    }

    /// Whether `u` lies in `im A'`.
    fn in_image(&self, u: &[u64], image_rank: usize) -> bool {
        let col = GfMatrix::from_columns(self.a.field(), u.len(), &[u.to_vec()]);
        self.a_prime.hstack(&col).rank() == image_rank
    }

    /// Classifies a vector `u = (z, w)` of `ker A`.
    pub fn classify(&self, u: &[u64]) -> Result<ExtensionCase, VarietyError> {
        if u.len() != self.a.cols() {
            return Err(VarietyError::Shape(format!("vector of length {}", u.len())));
        }
        if self.a.mul_vec(u).iter().any(|&c| c != 0) {
            return Err(VarietyError::NotInKernel);
        }
        let r = self.a_prime.rank();
        Ok(if self.in_image(u, r) {
            ExtensionCase::W0
        } else if self.in_image(&self.t.mul_vec(u), r) {
            ExtensionCase::W1
        } else {
            ExtensionCase::W2
        })
    }

    /// The dimension profile.
    pub fn profile(&self) -> AbProfile {
        let n = self.a.rows();
        let b = self.a.rank();
        let a = n - b;
        let w0 = self.a_prime.rank();
        let kernel = self.a.kernel_matrix();
        // rank [A' | T K] - rank A' = dim (T(ker A) + im A') / im A'.
        let image_t = self.a_prime.hstack(&(&self.t * &kernel)).rank() - w0;
        let w1 = a - image_t;
        AbProfile {
            a,
            b,
            w0,
            w1,
            w2: a,
            ker_a_prime: n - w0,
            h0_image_t: image_t,
            h0_kernel_t: w1 - w0,
        }
    }
}

/// The profile of a point of `V_d`.
pub fn ab_profile(x: &GfMatrix, y: &GfMatrix) -> Result<AbProfile, VarietyError> {
    Ok(StaircaseOperators::new(x, y)?.profile())
}

/// Appends the column pair `(z, w)`: `X' = [[X, z], [0, 0]]`,
/// `Y' = [[Y, w], [0, 0]]`.  The result lies in `V_{d+1}` iff `(z, w) ∈ ker A`.
pub fn extend(
    x: &GfMatrix,
    y: &GfMatrix,
    u: &[u64],
) -> Result<(GfMatrix, GfMatrix), VarietyError> {
    let d = x.rows();
    if u.len() != 2 * d {
        return Err(VarietyError::Shape(format!("vector of length {} for d = {d}", u.len())));
    }
    let f = x.field();
    let grow = |m: &GfMatrix, col: &[u64]| {
        let mut out = GfMatrix::zeros(f, d + 1, d + 1);
        for i in 0..d {
            for j in 0..d {
                out.set(i, j, m.get(i, j));
            }
            out.set(i, d, col[i]);
        }
        out
    };
    Ok((grow(x, &u[..d]), grow(y, &u[d..])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use cusp_groebner::PrimeField;

    #[test]
    fn zero_module_of_rank_one() {
        let f = PrimeField::new(2).unwrap();
        let z = GfMatrix::zeros(f, 1, 1);
        let p = ab_profile(&z, &z).unwrap();
        assert_eq!((p.a, p.b, p.w0, p.w1, p.w2), (2, 0, 0, 1, 2));
        assert!(p.satisfies_identities(1));
        let ops = StaircaseOperators::new(&z, &z).unwrap();
        assert_eq!(ops.classify(&[0, 0]).unwrap(), ExtensionCase::W0);
        assert_eq!(ops.classify(&[0, 1]).unwrap(), ExtensionCase::W1);
        assert_eq!(ops.classify(&[1, 0]).unwrap(), ExtensionCase::W2);
    }

    #[test]
    fn rejects_points_off_the_variety() {
        let f = PrimeField::new(3).unwrap();
        let x = GfMatrix::from_rows(f, &[vec![0, 1], vec![0, 0]]);
        let y = GfMatrix::zeros(f, 2, 2);
        assert!(ab_profile(&y, &y).is_ok());
        assert!(ab_profile(&x, &GfMatrix::identity(f, 2)).is_err());
    }
}
