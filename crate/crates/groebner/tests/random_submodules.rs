//! Randomized checks of division and reduced Gröbner bases against plain
//! linear algebra over `F_p`.

use cusp_groebner::{
    buchberger_general, divide, divides, is_groebner, reduce, CuspIdeal, Element, Monomial,
    PrimeField,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Codimension of the span of `{T^k g}` in `mF / T^N F` and the set of pivot
/// monomials of its row-reduced basis (pivot = `≺`-least monomial of a row).
fn linear_span(gens: &[Element], rank: u32) -> (usize, Vec<Monomial>) {
    let f = gens[0].field();
    let n = gens[0].trunc();
    let p = f.p();
    let monos: Vec<Monomial> = (2..n)
        .flat_map(|k| (1..=rank).map(move |i| Monomial::new(k, i)))
        .collect();
    let idx = |m: Monomial| monos.iter().position(|x| *x == m).unwrap();
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
                    rows[i][j] = (rows[i][j] + p * p - c * rows[r][j] % p) % p;
                }
            }
        }
        pivots.push(monos[col]);
        r += 1;
    }
    (monos.len() - r, pivots)
}

fn random_datum(rng: &mut ChaCha8Rng, d: u32, max_n: u32) -> Vec<CuspIdeal> {
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

fn random_unit_matrix(rng: &mut ChaCha8Rng, f: PrimeField, d: usize) -> Vec<Vec<u64>> {
    loop {
        let m: Vec<Vec<u64>> =
            (0..d).map(|_| (0..d).map(|_| rng.gen_range(0..f.p())).collect()).collect();
        // Gaussian elimination to test invertibility.
        let mut a = m.clone();
        let mut ok = true;
        for c in 0..d {
            let Some(piv) = (c..d).find(|&r| a[r][c] != 0) else {
                ok = false;
                break;
            };
            a.swap(c, piv);
            let inv = f.inv(a[c][c]);
            for r in c + 1..d {
                let factor = f.mul(a[r][c], inv);
                for j in 0..d {
                    a[r][j] = f.sub(a[r][j], f.mul(factor, a[c][j]));
                }
            }
        }
        if ok {
            return m;
        }
    }
}

/// Applies a random R-linear automorphism of `F` (unit constant part plus
/// random higher-order terms) to the monomial generators of a datum.
fn random_presentation(
    rng: &mut ChaCha8Rng,
    f: PrimeField,
    trunc: u32,
    datum: &[CuspIdeal],
) -> Vec<Element> {
    let d = datum.len();
    let unit = random_unit_matrix(rng, f, d);
    // column j: image of u_j as a list of (k, i, c) terms
    let columns: Vec<Vec<(u32, u32, u64)>> = (0..d)
        .map(|j| {
            let mut col = Vec::new();
            for i in 0..d {
                col.push((0, i as u32 + 1, unit[i][j]));
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
            gens.push(Element::from_terms(f, trunc, terms).unwrap());
        }
    }
    gens
}

/// A different generating set of the same submodule: unit rescaling, adding
/// `m`-multiples of other generators, and a redundant extra generator.
fn remix(rng: &mut ChaCha8Rng, gens: &[Element]) -> Vec<Element> {
    let f = gens[0].field();
    let mut out: Vec<Element> = gens
        .iter()
        .map(|g| {
            let mut h = g.scale(rng.gen_range(1..f.p()));
            for other in gens {
                let k = rng.gen_range(2..5);
                h.add_scaled(other, rng.gen_range(0..f.p()), k);
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

#[test]
fn reduced_bases_are_unique_and_match_linear_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC05E);
    for trial in 0..100 {
        let p = [2u64, 3][trial % 2];
        let f = PrimeField::new(p).unwrap();
        let d = rng.gen_range(1..=3u32);
        let datum = random_datum(&mut rng, d, 4);
        let n: u32 = datum.iter().map(|i| i.n()).sum();
        let trunc = 2 * 4 + 4;
        let gens = random_presentation(&mut rng, f, trunc, &datum);
        let other = remix(&mut rng, &gens);
        let gb = reduce(&gens, d).unwrap();
        let gb2 = reduce(&other, d).unwrap();
        assert_eq!(gb, gb2, "trial {trial}: reduced bases differ for {datum:?}");
        assert_eq!(gb.codim(), n as usize, "trial {trial}");
        let (codim, pivots) = linear_span(&gens, d);
        assert_eq!(gb.codim(), codim, "trial {trial}");
        let standard: Vec<Monomial> = (2..trunc)
            .flat_map(|k| (1..=d).map(move |i| Monomial::new(k, i)))
            .filter(|m| !pivots.contains(m))
            .collect();
        assert_eq!(gb.standard_monomials(), &standard[..], "trial {trial}");
        assert!(is_groebner(gb.basis()));
        assert!(buchberger_general(gb.elements()));
        for g in &gens {
            assert!(gb.contains(g));
        }
    }
}

fn element(p: u64, trunc: u32, rank: u32) -> impl Strategy<Value = Element> {
    prop::collection::vec((2..trunc, 1..=rank, 0..p as i64), 0..8).prop_map(move |terms| {
        let f = PrimeField::new(p).unwrap();
        Element::from_terms(f, trunc, terms.into_iter().map(|(k, i, c)| (Monomial::new(k, i), c)))
            .unwrap()
    })
}

proptest! {
    #[test]
    fn division_is_sound(
        f in element(3, 14, 2),
        divisors in prop::collection::vec(element(3, 14, 2), 1..4),
    ) {
        let divisors: Vec<Element> = divisors.into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!divisors.is_empty());
        let div = divide(&f, &divisors);
        prop_assert!(div.check(&f, &divisors).is_ok());
        for (m, _) in div.remainder.terms() {
            for g in &divisors {
                prop_assert!(divides(g.leading_monomial().unwrap(), m).is_none());
            }
        }
    }

    #[test]
    fn reduction_agrees_with_linear_algebra(gens in prop::collection::vec(element(2, 12, 2), 1..5)) {
        let gens: Vec<Element> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        match reduce(&gens, 2) {
            Ok(gb) => {
                let (codim, _) = linear_span(&gens, 2);
                prop_assert_eq!(gb.codim(), codim);
                for g in &gens {
                    prop_assert!(gb.contains(g));
                }
            }
            Err(e) => {
                let expected = matches!(
                    e,
                    cusp_groebner::GroebnerError::CodimExceedsTruncation { .. }
                        | cusp_groebner::GroebnerError::InfiniteCodimension(_)
                );
                prop_assert!(expected, "unexpected error {:?}", e);
            }
        }
    }
}
