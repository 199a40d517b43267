//! Counting `R`-submodules of `mF` of colength `n` by enumerating subspaces.
//!
//! A submodule `I ⊆ mF` with `dim mF/I = n` contains `m^{n+1} F = T^{2n+2} F`,
//! so it is determined by its image in `W = mF / T^{2n+4} F`, a space of
//! dimension `d(2n+2)` with basis `T^j u_i`, `2 <= j < 2n+4`.  A subspace of
//! `W` is an `R`-submodule iff it is stable under multiplication by `T^2`
//! and `T^3`.  Codimension-`n` subspaces are enumerated through their
//! `n`-dimensional annihilators in reduced row echelon form, each visited
//! exactly once; `I` is stable under `M` iff its annihilator is stable under
//! the transpose `M^T`, which on packed coordinates is a masked right shift.

use rayon::prelude::*;

use crate::{Budget, OracleError};

/// A vector of `F_p^D` packed into machine words.
trait Packed: Copy + Send + Sync {
    fn is_zero(self) -> bool;
    fn digit(self, k: usize) -> u8;
    /// `self - c * row`.
    fn sub_scaled(self, row: Self, c: u8) -> Self;
    /// `(self >> s) & mask`, applied digitwise.
    fn shr_mask(self, s: u32, mask: u32) -> Self;
    /// All vectors with digit 1 at `pivot`, arbitrary digits on `free` and
    /// zero elsewhere.
    fn row_candidates(pivot: usize, free: &[usize]) -> Vec<Self>;
}

/// `F_2`: one bit per coordinate.
impl Packed for u32 {
    fn is_zero(self) -> bool {
        self == 0
    }

    fn digit(self, k: usize) -> u8 {
        (self >> k & 1) as u8
    }

    fn sub_scaled(self, row: Self, c: u8) -> Self {
        if c == 1 {
            self ^ row
        } else {
            self
        }
    }

    fn shr_mask(self, s: u32, mask: u32) -> Self {
        (self >> s) & mask
    }

    fn row_candidates(pivot: usize, free: &[usize]) -> Vec<Self> {
        let free_mask: u32 = free.iter().map(|k| 1u32 << k).sum();
        let mut out = Vec::with_capacity(1 << free.len());
        let mut sub = 0u32;
        loop {
            out.push(sub | 1 << pivot);
            sub = sub.wrapping_sub(free_mask) & free_mask;
            if sub == 0 {
                break;
            }
        }
        out
    }
}

/// `F_3`: two bit planes, `one` marks digits equal to 1 and `two` digits
/// equal to 2 (never both).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Tri {
    one: u32,
    two: u32,
}

impl Tri {
    fn add(self, b: Self) -> Self {
        let (x1, x2, y1, y2) = (self.one, self.two, b.one, b.two);
        let x0 = !(x1 | x2);
        let y0 = !(y1 | y2);
        Self {
            one: (x1 & y0) | (x0 & y1) | (x2 & y2),
            two: (x2 & y0) | (x0 & y2) | (x1 & y1),
        }
    }

    fn neg(self) -> Self {
        Self { one: self.two, two: self.one }
    }
}

impl Packed for Tri {
    fn is_zero(self) -> bool {
        self.one == 0 && self.two == 0
    }

    fn digit(self, k: usize) -> u8 {
        (self.one >> k & 1) as u8 + 2 * (self.two >> k & 1) as u8
    }

    fn sub_scaled(self, row: Self, c: u8) -> Self {
        match c {
            0 => self,
            1 => self.add(row.neg()),
            _ => self.add(row),
        }
    }

    fn shr_mask(self, s: u32, mask: u32) -> Self {
        Self { one: (self.one >> s) & mask, two: (self.two >> s) & mask }
    }

    fn row_candidates(pivot: usize, free: &[usize]) -> Vec<Self> {
        let total = 3usize.pow(free.len() as u32);
        (0..total)
            .map(|mut idx| {
                let mut v = Self { one: 1 << pivot, two: 0 };
                for &k in free {
                    match idx % 3 {
                        1 => v.one |= 1 << k,
                        2 => v.two |= 1 << k,
                        _ => {}
                    }
                    idx /= 3;
                }
                v
            })
            .collect()
    }
}

/// The packed ambient space `W = mF / T^{2n+4} F`.
struct Window {
    dim: usize,
    /// `(s, mask)` for the transposes of multiplication by `T^2`, `T^3`.
    shifts: [(u32, u32); 2],
}

impl Window {
    fn new(d: usize, n: usize) -> Result<Self, OracleError> {
        let len = 2 * n + 2;
        let dim = d * len;
        if dim > 32 {
            return Err(OracleError::TooLarge(dim));
        }
        // Coordinate of `T^j u_i` is `(i - 1) * len + (j - 2)`.  The transpose
        // of `T^s` sends coordinate `k + s` to `k` inside each block.
        let mask = |s: usize| -> u32 {
            (0..d).flat_map(|i| (0..len.saturating_sub(s)).map(move |o| 1u32 << (i * len + o))).sum()
        };
        Ok(Self { dim, shifts: [(2, mask(2)), (3, mask(3))] })
    }
}

/// The Gaussian binomial `[dim choose k]_p`, saturating.
pub fn gaussian_binomial(dim: usize, k: usize, p: u64) -> u128 {
    if k > dim {
        return 0;
    }
    let p = p as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        let a = p.saturating_pow((dim - i) as u32).saturating_sub(1);
        let b = p.saturating_pow((i + 1) as u32) - 1;
        num = num.saturating_mul(a);
        den = den.saturating_mul(b);
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// All `k`-subsets of `0..dim`, increasing, in lexicographic order.
fn pivot_sets(dim: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, dim: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..dim {
            cur.push(c);
            rec(c + 1, dim, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, dim, k, &mut Vec::with_capacity(k), &mut out);
    out
}

fn is_stable<V: Packed>(rows: &[V], pivots: &[usize], window: &Window) -> bool {
    rows.iter().all(|&a| {
        window.shifts.iter().all(|&(s, mask)| {
            let mut v = a.shr_mask(s, mask);
            for (row, &piv) in rows.iter().zip(pivots) {
                let c = v.digit(piv);
                if c != 0 {
                    v = v.sub_scaled(*row, c);
                }
            }
            v.is_zero()
        })
    })
}

fn count_nested<V: Packed>(
    candidates: &[Vec<V>],
    pivots: &[usize],
    window: &Window,
    chosen: &mut Vec<V>,
) -> u64 {
    let k = chosen.len();
    if k == candidates.len() {
        return is_stable(chosen, pivots, window) as u64;
    }
    let mut total = 0;
    for &row in &candidates[k] {
        chosen.push(row);
        total += count_nested(candidates, pivots, window, chosen);
        chosen.pop();
    }
    total
}

/// Stable `n`-dimensional annihilators, `n >= 1`.  Chunks are pivot sets
/// and first rows, so partial counts are deterministic.
fn count_packed<V: Packed>(window: &Window, n: usize) -> u64 {
    pivot_sets(window.dim, n)
        .par_iter()
        .map(|pivots| {
            let candidates: Vec<Vec<V>> = pivots
                .iter()
                .map(|&c| {
                    let free: Vec<usize> =
                        (c + 1..window.dim).filter(|k| !pivots.contains(k)).collect();
                    V::row_candidates(c, &free)
                })
                .collect();
            candidates[0]
                .par_iter()
                .map(|&first| {
                    let mut chosen = Vec::with_capacity(n);
                    chosen.push(first);
                    count_nested(&candidates, pivots, window, &mut chosen)
                })
                .sum::<u64>()
        })
        .sum()
}

/// The number of `F_p`-points of the punctual Hilbert scheme: `R`-submodules
/// `I ⊆ mF`, `F = R^d`, with `dim mF/I = n`.  Supports `p ∈ {2, 3}`.
pub fn count_quot_bruteforce(d: usize, n: usize, p: u64) -> Result<u64, OracleError> {
    count_quot_bruteforce_with_budget(d, n, p, Budget::default())
}

/// [`count_quot_bruteforce`] with an explicit budget on the number of
/// candidate subspaces.
pub fn count_quot_bruteforce_with_budget(
    d: usize,
    n: usize,
    p: u64,
    budget: Budget,
) -> Result<u64, OracleError> {
    if p != 2 && p != 3 {
        return Err(OracleError::UnsupportedPrime(p));
    }
    let window = Window::new(d, n)?;
    budget.check(gaussian_binomial(window.dim, n, p))?;
    if n == 0 {
        return Ok(1);
    }
    Ok(match p {
        2 => count_packed::<u32>(&window, n),
        _ => count_packed::<Tri>(&window, n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(10, 4, 2), 53_743_987);
        assert_eq!(gaussian_binomial(3, 0, 3), 1);
        assert_eq!(gaussian_binomial(3, 4, 3), 0);
    }

    #[test]
    fn all_subspaces_are_visited_once() {
        // Without the stability filter the enumeration counts every subspace.
        for (dim, k) in [(4, 2), (5, 2), (6, 3)] {
            let window = Window { dim, shifts: [(0, u32::MAX), (0, u32::MAX)] };
            assert_eq!(count_packed::<u32>(&window, k) as u128, gaussian_binomial(dim, k, 2));
            assert_eq!(count_packed::<Tri>(&window, k) as u128, gaussian_binomial(dim, k, 3));
        }
    }

    #[test]
    fn ternary_arithmetic() {
        let digits = |v: Tri| (0..4).map(|k| v.digit(k)).collect::<Vec<_>>();
        let a = Tri { one: 0b0110, two: 0b1000 }; // digits 0,1,1,2
        let b = Tri { one: 0b1010, two: 0b0100 }; // digits 0,1,2,1
        assert_eq!(digits(a.add(b)), vec![0, 2, 0, 0]);
        assert_eq!(digits(a.sub_scaled(b, 1)), vec![0, 0, 2, 1]);
        assert_eq!(digits(a.sub_scaled(b, 2)), vec![0, 2, 0, 0]);
    }
}
