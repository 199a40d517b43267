//! Properties of the spiral-raising action and the stable orbit decomposition.

use std::collections::{BTreeMap, BTreeSet};

use cusp_strata::{
    apply_address, distance_matrix, enumerate_data, gamma, orbit_address, stable_orbit_decomposition,
    stretches, Color, LeadingTermDatum,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_vectors(d: usize, max_level: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max_level).map(move |l| {
                    let mut v = v.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out
}

fn all_colorings(d: usize) -> Vec<Vec<Color>> {
    (0..1u32 << d)
        .map(|m| (0..d).map(|r| if m >> r & 1 == 1 { Color::J } else { Color::K }).collect())
        .collect()
}

#[test]
fn spiral_operators_commute() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let d = rng.gen_range(1..=6);
        let x: Vec<u32> = (0..d).map(|_| rng.gen_range(0..=6)).collect();
        let (j, k) = (rng.gen_range(1..=d), rng.gen_range(1..=d));
        assert_eq!(gamma(j, &gamma(k, &x)), gamma(k, &gamma(j, &x)), "x={x:?} j={j} k={k}");
    }
}

#[test]
fn action_is_free_and_transitive() {
    for d in 1..=4 {
        let mut seen = BTreeSet::new();
        for x in all_vectors(d, 4) {
            let a = orbit_address(&x);
            assert_eq!(apply_address(&a), x);
            assert!(seen.insert(a), "address collision at {x:?}");
        }
        for a in all_vectors(d, 3) {
            assert_eq!(orbit_address(&apply_address(&a)), a);
        }
    }
}

#[test]
fn stretches_account_for_distance_changes() {
    for d in 1..=5 {
        for x in all_vectors(d, if d <= 3 { 4 } else { 2 }) {
            let before = distance_matrix(&x);
            for j in 1..=d {
                let s = stretches(j, &x);
                assert_eq!(s.len(), j - 1, "x={x:?} j={j}");
                let lower: BTreeSet<usize> = s.iter().map(|(b, _)| *b).collect();
                assert_eq!(lower, (1..j).collect(), "lower components biject onto [j-1]");
                let after = distance_matrix(&gamma(j, &x));
                for ((b, h), dist) in before.pairs() {
                    let expect = dist + u32::from(s.contains(&(b, h)));
                    assert_eq!(after.get(b, h), expect, "x={x:?} j={j} pair=({b},{h})");
                }
            }
        }
    }
}

#[test]
fn raising_adds_one_to_n_and_respects_exponents() {
    for d in 1..=4 {
        for n in 0..=(if d <= 3 { 6 } else { 4 }) {
            for alpha in enumerate_data(d, n) {
                let (b, delta) = alpha.exponents();
                let pairs = (0..d)
                    .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
                    .filter(|&(i, j)| alpha.colors()[i] == Color::K && alpha.colors()[j] == Color::J)
                    .count() as u32;
                assert_eq!(b, pairs, "b(α) counts ranked (K, J) pairs for {alpha}");
                let dm = alpha.distance_matrix();
                for j in 1..=d {
                    let raised = alpha.gamma(j);
                    assert_eq!(raised.n(), alpha.n() + 1);
                    let (b2, delta2) = raised.exponents();
                    assert_eq!(b2, b, "B is invariant under raising");
                    let obstructed = alpha
                        .stretches(j)
                        .iter()
                        .filter(|(lo, hi)| alpha.colors()[lo - 1] == Color::J && dm.get(*lo, *hi) == 0)
                        .count() as u32;
                    assert_eq!(delta2, delta + j as u32 - 1 - obstructed, "{alpha} j={j}");
                }
            }
        }
    }
}

#[test]
fn orbit_decomposition_partitions_data() {
    const MAX_N: u32 = 12;
    for d in 0..=3 {
        let mut hits: BTreeMap<LeadingTermDatum, usize> = BTreeMap::new();
        for orbit in stable_orbit_decomposition(d) {
            // Breadth-first walk of the orbit, bounded by n <= MAX_N.
            let mut frontier = vec![orbit.base.clone()];
            let mut seen = BTreeSet::new();
            while let Some(a) = frontier.pop() {
                if a.n() > MAX_N || !seen.insert(a.clone()) {
                    continue;
                }
                assert!(orbit.contains(&a));
                for &j in &orbit.generators {
                    assert!(a.is_stable(j), "γ_{j} unstable at {a} in orbit of {}", orbit.base);
                    frontier.push(a.gamma(j));
                }
            }
            for a in seen {
                *hits.entry(a).or_default() += 1;
            }
        }
        for n in 0..=MAX_N {
            for a in enumerate_data(d, n) {
                assert_eq!(hits.get(&a), Some(&1), "datum {a} covered {:?} times", hits.get(&a));
            }
        }
        let total: usize = (0..=MAX_N).map(|n| enumerate_data(d, n).len()).sum();
        assert_eq!(hits.len(), total);
    }
}

#[test]
fn colors_survive_round_trip_through_ideals() {
    for d in 1..=3 {
        for colors in all_colorings(d) {
            for x in all_vectors(d, 3) {
                let a = LeadingTermDatum::new(x, colors.clone()).unwrap();
                assert_eq!(LeadingTermDatum::from_ideals(&a.ideals()).unwrap(), a);
            }
        }
    }
}

proptest! {
    #[test]
    fn inverse_undoes_gamma(x in prop::collection::vec(0u32..8, 1..7), j in 1usize..7) {
        prop_assume!(j <= x.len());
        let y = gamma(j, &x);
        prop_assert_eq!(cusp_strata::gamma_inverse(j, &y), Some(x));
    }

    #[test]
    fn text_form_round_trips(x in prop::collection::vec(0u32..6, 0..6), mask in 0u32..64) {
        let colors: Vec<Color> =
            (0..x.len()).map(|r| if mask >> r & 1 == 1 { Color::J } else { Color::K }).collect();
        let a = LeadingTermDatum::new(x, colors).unwrap();
        prop_assert_eq!(a.to_string().parse::<LeadingTermDatum>().unwrap(), a);
    }
}
