//! Commuting matrix pairs `(A, B)` with `A² = B³` over `F_p`.
//!
//! `B` runs over all of `Mat_n(F_p)`; for each `B` the commutant
//! `{A : AB = BA}` is computed as a kernel, and `A` runs over it.

use rayon::prelude::*;

use crate::{Budget, OracleError};

/// A dense `n x n` matrix over `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Mat {
    n: usize,
    p: u64,
    data: Vec<u64>,
}

impl Mat {
    fn zero(n: usize, p: u64) -> Self {
        Self { n, p, data: vec![0; n * n] }
    }

    fn from_index(n: usize, p: u64, mut idx: u64) -> Self {
        let mut m = Self::zero(n, p);
        for x in &mut m.data {
            *x = idx % p;
            idx /= p;
        }
        m
    }

    fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n, self.p);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        for x in &mut out.data {
            *x %= self.p;
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.data.iter().all(|x| *x == 0)
    }

    fn is_nilpotent(&self) -> bool {
        let mut power = self.clone();
        for _ in 1..self.n {
            power = power.mul(self);
        }
        power.is_zero()
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    (1..p).find(|x| a * x % p == 1).expect("nonzero residue mod a prime")
}

/// A basis of the kernel of the `rows x cols` matrix `m` over `F_p`.
fn kernel(mut m: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, pr);
        let inv = inv_mod(m[r][c], p);
        for x in &mut m[r] {
            *x = *x * inv % p;
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0; cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[row][free]) % p;
            }
            v
        })
        .collect()
}

/// Basis of the commutant of `b`, as flattened matrices.
fn commutant(b: &Mat) -> Vec<Vec<u64>> {
    let (n, p) = (b.n, b.p);
    // Row (i, k) of the system is the (i, k) entry of AB - BA, linear in the
    // unknown entries A_{ij} (column i * n + j).
    let mut system = vec![vec![0u64; n * n]; n * n];
    for i in 0..n {
        for k in 0..n {
            let row = &mut system[i * n + k];
            for j in 0..n {
                row[i * n + j] = (row[i * n + j] + b.data[j * n + k]) % p;
                row[j * n + k] = (row[j * n + k] + p - b.data[i * n + j]) % p;
            }
        }
    }
    kernel(system, n * n, p)
}

fn count_pairs(n: usize, p: u64, budget: Budget, nilpotent: bool) -> Result<u64, OracleError> {
    if !(2..=7).contains(&p) || (2..p).any(|k| p % k == 0) {
        return Err(OracleError::UnsupportedPrime(p));
    }
    budget.check((p as u128).saturating_pow((n * n + n) as u32))?;
    if n == 0 {
        return Ok(1);
    }
    let total_b = p.pow((n * n) as u32);
    Ok((0..total_b)
        .into_par_iter()
        .map(|idx| {
            let b = Mat::from_index(n, p, idx);
            if nilpotent && !b.is_nilpotent() {
                return 0;
            }
            let b3 = b.mul(&b).mul(&b);
            let basis = commutant(&b);
            let mut count = 0u64;
            for combo in 0..p.pow(basis.len() as u32) {
                let mut a = Mat::zero(n, p);
                let mut c = combo;
                for v in &basis {
                    let coeff = c % p;
                    c /= p;
                    if coeff != 0 {
                        for (x, y) in a.data.iter_mut().zip(v) {
                            *x = (*x + coeff * y) % p;
                        }
                    }
                }
                if a.mul(&a) == b3 && (!nilpotent || a.is_nilpotent()) {
                    count += 1;
                }
            }
            count
        })
        .sum())
}

/// Pairs of commuting nilpotent `n x n` matrices over `F_p` with `A² = B³`.
pub fn count_nilpotent_pairs(n: usize, p: u64) -> Result<u64, OracleError> {
    count_pairs(n, p, Budget::default(), true)
}

/// All pairs of commuting `n x n` matrices over `F_p` with `A² = B³`.
pub fn count_all_pairs(n: usize, p: u64) -> Result<u64, OracleError> {
    count_pairs(n, p, Budget::default(), false)
}

/// [`count_nilpotent_pairs`] with an explicit budget on `p^(n² + n)`.
pub fn count_nilpotent_pairs_with_budget(n: usize, p: u64, budget: Budget) -> Result<u64, OracleError> {
    count_pairs(n, p, budget, true)
}

/// [`count_all_pairs`] with an explicit budget on `p^(n² + n)`.
pub fn count_all_pairs_with_budget(n: usize, p: u64, budget: Budget) -> Result<u64, OracleError> {
    count_pairs(n, p, budget, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutant_dimensions() {
        // Scalars commute with everything; a regular nilpotent has an
        // n-dimensional commutant.
        assert_eq!(commutant(&Mat::zero(3, 2)).len(), 9);
        let mut jordan = Mat::zero(3, 3);
        jordan.data[1] = 1;
        jordan.data[5] = 1;
        assert_eq!(commutant(&jordan).len(), 3);
    }

    #[test]
    fn commutant_vectors_commute() {
        for idx in [5u64, 77, 300, 511] {
            let b = Mat::from_index(3, 2, idx);
            for v in commutant(&b) {
                let a = Mat { n: 3, p: 2, data: v };
                assert_eq!(a.mul(&b), b.mul(&a));
            }
        }
    }
}
