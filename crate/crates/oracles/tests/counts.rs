//! Brute-force counts against the symbolic series and closed forms.

use cusp_oracles::{
    count_all_pairs, count_nilpotent_pairs, count_nilpotent_pairs_with_budget,
    count_quot_bruteforce, count_quot_bruteforce_with_budget, Budget, OracleError,
};
use cusp_qalgebra::{gl_order, LaurentPolyQ};
use cusp_series::{hilb_series, matrix_count_formula, zhat_truncation, Mode};
use num_bigint::BigInt;
use num_rational::BigRational;

fn at(x: &LaurentPolyQ, p: u64) -> BigInt {
    x.evaluate_integer(&BigInt::from(p)).unwrap()
}

#[test]
fn small_examples() {
    assert_eq!(count_quot_bruteforce(1, 0, 2).unwrap(), 1);
    assert_eq!(count_quot_bruteforce(1, 1, 2).unwrap(), 3);
    assert_eq!(count_quot_bruteforce(2, 0, 3).unwrap(), 1);
    for p in [2, 3, 5] {
        assert_eq!(count_nilpotent_pairs(1, p).unwrap(), 1);
    }
    assert_eq!(count_all_pairs(1, 2).unwrap(), 2);
    assert_eq!(count_all_pairs(1, 3).unwrap(), 3);
    // a² = b³ over F_p has exactly p solutions, parametrized by s -> (s³, s²).
    assert_eq!(count_all_pairs(1, 5).unwrap(), 5);
    assert_eq!(count_all_pairs(1, 7).unwrap(), 7);
}

#[test]
fn quot_counts_match_hilbert_series() {
    let cases: &[(usize, usize, u64)] = &[(1, 3, 2), (2, 2, 2), (1, 3, 3)];
    for &(d, n_max, p) in cases {
        let coeffs = hilb_series(d, Mode::Symbolic).unwrap().expand(n_max).unwrap();
        for (n, c) in coeffs.iter().enumerate() {
            let brute = count_quot_bruteforce(d, n, p).unwrap();
            assert_eq!(BigInt::from(brute), at(c, p), "d = {d}, n = {n}, p = {p}");
        }
    }
}

#[test]
fn frozen_quot_counts() {
    assert_eq!(count_quot_bruteforce(2, 1, 2).unwrap(), 15);
    assert_eq!(count_quot_bruteforce(2, 2, 2).unwrap(), 59);
    assert_eq!(count_quot_bruteforce(2, 1, 3).unwrap(), 1 + 3 + 9 + 27);
}

#[test]
fn budgets_are_enforced() {
    let tiny = Budget { max_candidates: 10 };
    assert!(matches!(
        count_quot_bruteforce_with_budget(2, 2, 2, tiny),
        Err(OracleError::BudgetExceeded { .. })
    ));
    assert!(matches!(count_quot_bruteforce(2, 3, 2), Err(OracleError::BudgetExceeded { .. })));
    assert!(matches!(count_quot_bruteforce(1, 1, 5), Err(OracleError::UnsupportedPrime(5))));
    assert!(matches!(
        count_nilpotent_pairs_with_budget(3, 2, tiny),
        Err(OracleError::BudgetExceeded { .. })
    ));
}

#[test]
fn nilpotent_pairs_match_cohen_lenstra_coefficients() {
    let zhat = zhat_truncation(3, Mode::Symbolic).unwrap();
    for p in [2u64, 3] {
        for (n, c) in zhat.iter().enumerate() {
            let brute = count_nilpotent_pairs(n, p).unwrap();
            let gl = at(&gl_order(n as u32), p);
            let expected = c.evaluate(&BigRational::from_integer(p.into())).unwrap();
            assert_eq!(BigRational::new(brute.into(), gl), expected, "n = {n}, p = {p}");
        }
    }
}

#[test]
fn frozen_pair_counts() {
    assert_eq!(count_nilpotent_pairs(2, 2).unwrap(), 10);
    assert_eq!(count_nilpotent_pairs(3, 2).unwrap(), 232);
    assert_eq!(count_nilpotent_pairs(2, 3).unwrap(), 33);
    assert_eq!(count_all_pairs(2, 2).unwrap(), 22);
    assert_eq!(count_all_pairs(3, 2).unwrap(), 848);
}

#[test]
fn all_pairs_match_matrix_count_formula() {
    for p in [2u64, 3] {
        for n in 0..=3 {
            let brute = count_all_pairs(n, p).unwrap();
            assert_eq!(BigInt::from(brute), at(&matrix_count_formula(n), p), "n = {n}, p = {p}");
        }
    }
}
