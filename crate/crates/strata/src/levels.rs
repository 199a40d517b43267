//! Level vectors `x ∈ N^d`: rank order, spiral raising, distances, stretches
//! and orbit addresses.
//!
//! Seats are 0-based in code (`x[s]` is the level at seat `s + 1`); ranks and
//! the `(b, h)` pairs returned by [`stretches`] are 1-based to match the usual
//! notation `x_(b)`.

use std::collections::BTreeSet;

/// Seats (0-based) sorted by `(level, seat)`: entry `r` is the seat of the
/// component of rank `r + 1`.
pub fn rank_order(x: &[u32]) -> Vec<usize> {
    let mut seats: Vec<usize> = (0..x.len()).collect();
    seats.sort_by_key(|&s| (x[s], s));
    seats
}

/// The spiral-raising operator `γ_j` (`1 <= j <= d`).
///
/// The `j - 1` lowest-ranked components stay put.  The others occupy the
/// *available* seats `a_1 < ... < a_m`; each is shifted to the next available
/// seat to the right, and the one at `a_m` wraps around to `a_1` with its
/// level raised by one.
///
/// # Panics
///
/// Panics unless `1 <= j <= x.len()`.
pub fn gamma(j: usize, x: &[u32]) -> Vec<u32> {
    assert!(j >= 1 && j <= x.len(), "γ_{j} undefined for d = {}", x.len());
    let avail = available_seats(j, x);
    let mut y = x.to_vec();
    for w in avail.windows(2) {
        y[w[1]] = x[w[0]];
    }
    y[avail[0]] = x[avail[avail.len() - 1]] + 1;
    y
}

fn available_seats(j: usize, x: &[u32]) -> Vec<usize> {
    let fixed: BTreeSet<usize> = rank_order(x).into_iter().take(j - 1).collect();
    (0..x.len()).filter(|s| !fixed.contains(s)).collect()
}

/// The preimage of `y` under `γ_j`, if it exists in `N^d`.
///
/// Raising never lets a moved component drop below a fixed one, so the
/// fixed components of a preimage are the `j - 1` lowest of `y`; undoing the
/// shift on the remaining seats gives the only candidate, which is then
/// verified.
pub fn gamma_inverse(j: usize, y: &[u32]) -> Option<Vec<u32>> {
    assert!(j >= 1 && j <= y.len(), "γ_{j} undefined for d = {}", y.len());
    let avail = available_seats(j, y);
    let mut x = y.to_vec();
    for w in avail.windows(2) {
        x[w[0]] = y[w[1]];
    }
    x[avail[avail.len() - 1]] = y[avail[0]].checked_sub(1)?;
    (gamma(j, &x) == y).then_some(x)
}

/// Distance `δ(x_(b), x_(h))` between ranked components, `1 <= b < h <= d`:
/// `floor(l_h + s_h/d - l_b - s_b/d)`.
pub fn distance(x: &[u32], b: usize, h: usize) -> u32 {
    let order = rank_order(x);
    ranked_distance(x, order[b - 1], order[h - 1])
}

fn ranked_distance(x: &[u32], sb: usize, sh: usize) -> u32 {
    x[sh] - x[sb] - u32::from(sh < sb)
}

/// The matrix of pairwise distances `δ_bh` for `1 <= b < h <= d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DistanceMatrix {
    d: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    /// The rank `d`.
    pub fn d(&self) -> usize {
        self.d
    }

    /// `δ_bh` for `1 <= b < h <= d`.
    pub fn get(&self, b: usize, h: usize) -> u32 {
        assert!(1 <= b && b < h && h <= self.d, "δ_({b},{h}) out of range");
        self.entries[(b - 1) * self.d + (h - 1)]
    }

    /// All `((b, h), δ_bh)` in lexicographic order of `(b, h)`.
    pub fn pairs(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        (1..=self.d).flat_map(move |b| (b + 1..=self.d).map(move |h| ((b, h), self.get(b, h))))
    }
}

/// The distance matrix of a level vector.
pub fn distance_matrix(x: &[u32]) -> DistanceMatrix {
    let d = x.len();
    let order = rank_order(x);
    let mut entries = vec![0; d * d];
    for b in 0..d {
        for h in b + 1..d {
            entries[b * d + h] = ranked_distance(x, order[b], order[h]);
        }
    }
    DistanceMatrix { d, entries }
}

/// The stretches `S_j(x)`: pairs `(b, h)` with `b < j <= h` such that,
/// writing `i(·)` for seats, one of
///
/// * `i(x_(h)) < i(x_(b)) < i(γ_j(x)_(h))`,
/// * `i(γ_j(x)_(h)) < i(x_(h)) < i(x_(b))`,
/// * `i(x_(b)) < i(γ_j(x)_(h)) < i(x_(h))`
///
/// holds.  These are exactly the distances that `γ_j` increases (by one).
///
/// Equivalently, `x_(b)` sits strictly inside the cyclic arc swept by the
/// moved component as it travels rightwards from `i(x_(h))` to
/// `i(γ_j(x)_(h))`.  When `j = d` the single moved component returns to its
/// own seat after a full turn; the three inequalities above are then all
/// false, but the full turn passes every other seat, so every `(b, d)` is a
/// stretch.  The arc formulation handles both cases uniformly.
pub fn stretches(j: usize, x: &[u32]) -> BTreeSet<(usize, usize)> {
    let d = x.len();
    let before = rank_order(x);
    let after = rank_order(&gamma(j, x));
    let mut out = BTreeSet::new();
    for b in 1..j {
        for h in j..=d {
            let (xh, xb, gh) = (before[h - 1], before[b - 1], after[h - 1]);
            let offset = (xb + d - xh) % d;
            let span = match (gh + d - xh) % d {
                0 => d,
                s => s,
            };
            if 0 < offset && offset < span {
                out.insert((b, h));
            }
        }
    }
    out
}

/// `a · x = γ_1^{a_1} ∘ ... ∘ γ_d^{a_d}(x)` applied to the zero vector.
pub fn apply_address(a: &[u32]) -> Vec<u32> {
    let mut x = vec![0; a.len()];
    for (j, &k) in a.iter().enumerate() {
        for _ in 0..k {
            x = gamma(j + 1, &x);
        }
    }
    x
}

/// The unique `a ∈ N^d` with `a · 0 = x`.
///
/// Greedy inversion: the operators commute and act freely, so whenever
/// `γ_j^{-1}(x)` exists in `N^d` the address has `a_j >= 1`.  We peel off
/// operators, trying `j = d, d-1, ..., 1`, until reaching zero; each step
/// lowers `Σ x` by one.
pub fn orbit_address(x: &[u32]) -> Vec<u32> {
    let d = x.len();
    let mut a = vec![0u32; d];
    let mut cur = x.to_vec();
    while cur.iter().any(|&l| l > 0) {
        let (j, prev) = (1..=d)
            .rev()
            .find_map(|j| gamma_inverse(j, &cur).map(|p| (j, p)))
            .expect("the spiral-raising action is transitive");
        a[j - 1] += 1;
        cur = prev;
    }
    a
}

/// All level vectors of length `d` whose entries sum to `total`.
pub fn enumerate_levels(d: usize, total: u32) -> Vec<Vec<u32>> {
    fn rec(d: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == d {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for l in 0..=total {
            prefix.push(l);
            rec(d, total - l, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(d, total, &mut Vec::with_capacity(d), &mut out);
    out
}
