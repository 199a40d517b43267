//! Frozen closed forms for `H_d`, `Q_d` and the per-color contributions, and
//! agreement between the symbolic and per-prime engines.

use std::collections::BTreeMap;

use cusp_qalgebra::{t_pochhammer, LaurentPolyQ, TPoly, TSeries};
use cusp_series::{
    color_numerator, hilb_from_quot, hilb_series, nh, nh_guess, nh_unspecialized, nq,
    quot_series, Mode, StratumClasses,
};
use cusp_strata::{stable_orbit_decomposition, Color, LeadingTermDatum};
use num_bigint::BigInt;

fn poly(s: &str) -> TPoly {
    s.parse().unwrap()
}

fn series(num: &str, d: u32) -> TSeries {
    TSeries::new(poly(num), t_pochhammer(d)).unwrap()
}

const NH: [&str; 4] = [
    "1",
    "1 + q t",
    "1 + q^2 t + q^3 t + q^4 t^2",
    "1 + q^3 t + q^4 t + q^5 t + q^6 t^2 + q^7 t^2 + q^8 t^2 + q^9 t^3",
];

const NQ: [&str; 4] = [
    "1",
    "1 + q t^2",
    "1 + q^2 t^2 + q^3 t^2 + q^4 t^4",
    "1 + q^3 t^2 + q^4 t^2 + q^5 t^2 + q^6 t^4 + q^7 t^4 + q^8 t^4 + q^9 t^6",
];

#[test]
fn hilbert_numerators() {
    for (d, expected) in NH.iter().enumerate() {
        assert_eq!(nh(d, Mode::Symbolic).unwrap(), poly(expected), "NH_{d}");
        assert_eq!(hilb_series(d, Mode::Symbolic).unwrap(), series(expected, d as u32));
        assert_eq!(nh_guess(d), poly(expected), "closed form at d = {d}");
    }
}

#[test]
fn quot_numerators() {
    for (d, expected) in NQ.iter().enumerate() {
        let nq_d = nq(d, Mode::Symbolic).unwrap();
        assert_eq!(nq_d, poly(expected), "NQ_{d}");
        assert_eq!(nq_d, poly(NH[d]).compose_t_power(2), "NQ_{d}(t) = NH_{d}(t^2)");
        assert_eq!(quot_series(d, Mode::Symbolic).unwrap(), series(expected, d as u32));
    }
}

#[test]
fn hilbert_from_quot_round_trip() {
    let quots: Vec<TSeries> = (0..=3).map(|d| quot_series(d, Mode::Symbolic).unwrap()).collect();
    for d in 0..=3 {
        let h = hilb_from_quot(&quots[..=d]).unwrap();
        assert_eq!(h.numerator(), &poly(NH[d]), "d = {d}");
        assert_eq!(h, hilb_series(d, Mode::Symbolic).unwrap());
    }
}

fn colors(s: &str) -> Vec<Color> {
    s.chars().map(|c| if c == 'J' { Color::J } else { Color::K }).collect()
}

#[test]
fn rank_three_contributions_by_color() {
    // Every datum of color (J,J,J) has n >= 3, so its numerator starts at t^3.
    let table = [
        ("JJK", "q^6t^2 + 2q^6t^3 - q^7t^3 - q^8t^3 + q^6t^4 - q^7t^4 - q^8t^4 + q^9t^4 + q^7t^5 - 2q^8t^5 + q^9t^5"),
        ("JJJ", "q^9t^3 + 2q^9t^4 - q^10t^4 - q^11t^4 + q^9t^5 - q^10t^5 - q^11t^5 + q^12t^5 + q^10t^6 - 2q^11t^6 + q^12t^6"),
        ("JKJ", "q^7t^2 + q^7t^3 - q^9t^3 + q^7t^4 - q^8t^4 - q^9t^4 + q^10t^4"),
        ("JKK", "q^3t + q^3t^2 - q^5t^2 + q^3t^3 - q^4t^3 - q^5t^3 + q^7t^3 - q^9t^4 + q^10t^4 - q^7t^5 + 2q^8t^5 - q^9t^5 - q^10t^6 + 2q^11t^6 - q^12t^6"),
        ("KJJ", "q^8t^2 + q^9t^3 - q^10t^3"),
        ("KJK", "q^4t + q^5t^2 - q^6t^2 - q^6t^3 + q^8t^3 - q^7t^4 + 2q^8t^4 - 2q^9t^4 + q^11t^4 + q^11t^5 - q^12t^5 - q^10t^6 + 2q^11t^6 - q^12t^6 + q^12t^7 - q^13t^7"),
        ("KKJ", "q^5t - q^9t^5 + q^10t^5 - q^12t^7 + q^13t^7"),
        ("KKK", "1 - q^3t^2 + q^6t^2 - q^3t^3 + q^4t^3 + q^5t^3 - q^6t^3 - q^7t^3 + q^10t^3 - q^6t^4 + q^7t^4 + q^9t^4 - q^10t^4 + q^10t^6 - 2q^11t^6 + q^12t^6"),
    ];
    let classes = StratumClasses::new(Mode::Symbolic);
    let mut total = TPoly::zero();
    for (c, expected) in table {
        let got = color_numerator(3, Some(&colors(c)), &classes).unwrap();
        assert_eq!(got, poly(expected), "color {c}");
        total = &total + &got;
    }
    assert_eq!(total, poly(NH[3]));
}

#[test]
fn rank_two_contributions_by_color() {
    let table = [
        ("KK", series("1 - q^2t^2 + q^3t^2 - q^4t^3 + q^5t^3", 2)),
        ("KJ", series("q^3 t", 2)),
        ("JK", &TSeries::new(poly("q^2 t"), poly("1 - t")).unwrap() + &series("q^2 t^2", 2)),
        ("JJ", &TSeries::new(poly("q^4 t^2"), poly("1 - t")).unwrap() + &series("q^4 t^3", 2)),
    ];
    let classes = StratumClasses::new(Mode::Symbolic);
    for (c, expected) in table {
        let got = color_numerator(2, Some(&colors(c)), &classes).unwrap();
        assert_eq!(TSeries::new(got, t_pochhammer(2)).unwrap(), expected, "color {c}");
    }
    let kk: BTreeMap<String, TPoly> = stable_orbit_decomposition(2)
        .into_iter()
        .filter(|o| o.base.is_pure_k())
        .map(|o| (o.base.to_string(), classes.content(&o.base).unwrap()))
        .collect();
    assert_eq!(kk["(K(0),K(0))"], poly("1"));
    assert_eq!(kk["(K(0),K(1))"], poly("q t"));
    assert_eq!(kk["(K(0),K(2))"], poly("q^3 t^2"));
    assert_eq!(kk["(K(0),K(3))"], poly("q^5 t^3"));
}

#[test]
fn per_prime_engine_agrees_with_symbolic() {
    for d in 0..=3 {
        let symbolic = nh(d, Mode::Symbolic).unwrap();
        for p in [2u64, 3, 5] {
            let at_p = nh(d, Mode::AtPrime(p)).unwrap();
            assert_eq!(at_p, symbolic.specialize_q(&BigInt::from(p)).unwrap(), "d={d} p={p}");
            let q_at_p = nq(d, Mode::AtPrime(p)).unwrap();
            let q_sym = nq(d, Mode::Symbolic).unwrap();
            assert_eq!(q_at_p, q_sym.specialize_q(&BigInt::from(p)).unwrap(), "d={d} p={p}");
        }
    }
}

#[test]
fn rank_four_per_prime_matches_closed_form() {
    // Numeric evidence only: symbolic A(α) for non-stable rank-4 data is open.
    for p in [2u64, 3] {
        let at_p = nh(4, Mode::AtPrime(p)).unwrap();
        assert_eq!(at_p, nh_guess(4).specialize_q(&BigInt::from(p)).unwrap(), "p = {p}");
    }
    assert!(nh(4, Mode::Symbolic).is_err());
}

#[test]
fn orbit_sums_match_closed_forms() {
    // For every rank-3 orbit, summing Cont over its elements with n <= N
    // reproduces the expansion of Cont(base)/Π(1 - q^{j-1} t) up to t^N.
    const N: usize = 9;
    let classes = StratumClasses::new(Mode::Symbolic);
    for orbit in stable_orbit_decomposition(3) {
        let mut total = vec![LaurentPolyQ::zero(); N + 1];
        let mut stack: Vec<LeadingTermDatum> = vec![orbit.base.clone()];
        let mut seen = std::collections::BTreeSet::new();
        while let Some(a) = stack.pop() {
            if a.n() as usize > N || !seen.insert(a.clone()) {
                continue;
            }
            let c = classes.content(&a).unwrap();
            total[a.n() as usize] += &c.coeff(a.n() as usize);
            for &j in &orbit.generators {
                stack.push(a.gamma(j));
            }
        }
        let num = classes.orbit_numerator(&orbit).unwrap();
        let expansion = TSeries::new(num, t_pochhammer(3)).unwrap().expand(N).unwrap();
        assert_eq!(total, expansion, "orbit of {}", orbit.base);
    }
}

#[test]
fn unspecialized_per_prime_numerator_keeps_q() {
    let h = nh_unspecialized(1, Mode::AtPrime(2)).unwrap();
    assert_eq!(h, poly("1 + q t"));
}
