//! Random submodules of `mF` for the reduced-basis uniqueness trials.
//!
//! A submodule is presented by applying a random `R`-linear automorphism of
//! `F` to the monomial generators of a random leading-term datum, then
//! re-presented by an unrelated generating set of the same submodule.  Its
//! codimension and leading monomials are also computed by plain row
//! reduction of the span of all `T^k`-multiples.

use cusp_groebner::{CuspIdeal, Element, Monomial, PrimeField};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Codimension of the span of `{T^k g}` in `mF / T^N F`, and the pivot
/// (`≺`-least) monomials of its row-reduced basis.
pub fn linear_span(gens: &[Element], rank: u32) -> (usize, Vec<Monomial>) {
    let f = gens[0].field();
    let n = gens[0].trunc();
    let monos: Vec<Monomial> =
        (2..n).flat_map(|k| (1..=rank).map(move |i| Monomial::new(k, i))).collect();
    let idx = |m: Monomial| monos.iter().position(|x| *x == m).expect("monomial in window");
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for g in gens {
        for k in std::iter::once(0).chain(2..n) {
            let mut row = vec![0u64; monos.len()];
            for (m, c) in g.mul_t(k).terms() {
                row[idx(m)] = c;
            }
            rows.push(row);
        }
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..monos.len() {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(r, piv);
        let inv = f.inv(rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let c = rows[i][col];
                for j in 0..monos.len() {
                    rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[r][j]));
                }
            }
        }
        pivots.push(monos[col]);
        r += 1;
    }
    (monos.len() - r, pivots)
}

/// A random datum of rank `d` with `n(α) <= max_n`.
pub fn random_datum(rng: &mut ChaCha8Rng, d: u32, max_n: u32) -> Vec<CuspIdeal> {
    loop {
        let datum: Vec<CuspIdeal> = (0..d)
            .map(|_| {
                let a = rng.gen_range(0..=max_n);
                if a >= 1 && rng.gen_bool(0.5) {
                    CuspIdeal::J(a)
                } else {
                    CuspIdeal::K(a)
                }
            })
            .collect();
        if datum.iter().map(|i| i.n()).sum::<u32>() <= max_n {
            return datum;
        }
    }
}

fn is_invertible(f: PrimeField, m: &[Vec<u64>]) -> bool {
    let d = m.len();
    let mut a = m.to_vec();
    for c in 0..d {
        let Some(piv) = (c..d).find(|&r| a[r][c] != 0) else { return false };
        a.swap(c, piv);
        let inv = f.inv(a[c][c]);
        for r in c + 1..d {
            let factor = f.mul(a[r][c], inv);
            for j in 0..d {
                a[r][j] = f.sub(a[r][j], f.mul(factor, a[c][j]));
            }
        }
    }
    true
}

/// Generators of the image of `M_α` under a random automorphism of `F`.
pub fn random_presentation(
    rng: &mut ChaCha8Rng,
    f: PrimeField,
    trunc: u32,
    datum: &[CuspIdeal],
) -> Vec<Element> {
    let d = datum.len();
    let unit = loop {
        let m: Vec<Vec<u64>> =
            (0..d).map(|_| (0..d).map(|_| rng.gen_range(0..f.p())).collect()).collect();
        if is_invertible(f, &m) {
            break m;
        }
    };
    // Column j: the image of u_j as (T-degree, basis, coefficient) terms.
    let columns: Vec<Vec<(u32, u32, u64)>> = (0..d)
        .map(|j| {
            let mut col = Vec::new();
            for (i, row) in unit.iter().enumerate() {
                col.push((0, i as u32 + 1, row[j]));
                for k in 2..trunc {
                    if rng.gen_bool(0.3) {
                        col.push((k, i as u32 + 1, rng.gen_range(0..f.p())));
                    }
                }
            }
            col
        })
        .collect();
    let mut gens = Vec::new();
    for (j, ideal) in datum.iter().enumerate() {
        for e in ideal.generators() {
            let terms = columns[j]
                .iter()
                .map(|&(k, i, c)| (Monomial::new(k + e, i), c as i64))
                .filter(|(m, _)| m.t_deg < trunc);
            gens.push(Element::from_terms(f, trunc, terms).expect("terms lie in mF"));
        }
    }
    gens
}

/// Another generating set of the same submodule: unit rescaling, adding
/// `m`-multiples of the other generators, and one redundant generator.
pub fn remix(rng: &mut ChaCha8Rng, gens: &[Element]) -> Vec<Element> {
    let f = gens[0].field();
    let mut out: Vec<Element> = gens
        .iter()
        .map(|g| {
            let mut h = g.scale(rng.gen_range(1..f.p()));
            for other in gens {
                h.add_scaled(other, rng.gen_range(0..f.p()), rng.gen_range(2..5));
            }
            h
        })
        .collect();
    let mut extra = Element::zero(f, gens[0].trunc());
    for g in gens {
        extra.add_scaled(g, rng.gen_range(0..f.p()), [0, 2, 3][rng.gen_range(0..3)]);
    }
    out.push(extra);
    out.reverse();
    out
}
