//! Algebraic properties of the q-algebra layer, checked on random inputs.

use cusp_qalgebra::{
    binomial2, pascal_inverse, pascal_matrix, q_binomial, q_pochhammer, t_pochhammer,
    LaurentPolyQ, TPoly, TSeries,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPolyQ> {
    prop::collection::vec((-6i64..7, -20i64..21), 0..6)
        .prop_map(|terms| LaurentPolyQ::from_terms(terms.into_iter().map(|(e, c)| (e, c))))
}

fn tpoly() -> impl Strategy<Value = TPoly> {
    prop::collection::vec(laurent(), 0..5).prop_map(TPoly::from_coeffs)
}

proptest! {
    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in laurent(), b in laurent(), x in 1i64..6) {
        let x = BigRational::from_integer(BigInt::from(x));
        let lhs = (&a * &b).evaluate(&x).unwrap();
        prop_assert_eq!(lhs, a.evaluate(&x).unwrap() * b.evaluate(&x).unwrap());
    }

    #[test]
    fn text_round_trip(a in tpoly()) {
        let back: TPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn json_round_trip(a in tpoly()) {
        prop_assert_eq!(TPoly::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn tpoly_division(a in tpoly(), b in tpoly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn substitution_is_multiplicative(a in tpoly(), b in tpoly(), s in -3i64..4, k in -2i64..3) {
        prop_assert_eq!((&a * &b).substitute(s, k), &a.substitute(s, k) * &b.substitute(s, k));
    }

    #[test]
    fn expansion_times_denominator_is_numerator(num in tpoly(), d in 1u32..4) {
        let den = t_pochhammer(d);
        let order = 8;
        let coeffs = TSeries::new(num.clone(), den.clone()).unwrap().expand(order).unwrap();
        let prod = &TPoly::from_coeffs(coeffs) * &den;
        for i in 0..=order {
            prop_assert_eq!(prod.coeff(i), num.coeff(i));
        }
    }
}

#[test]
fn q_binomials_satisfy_pascal_recurrence() {
    for d in 1..10i64 {
        for r in 1..d {
            let lhs = q_binomial(d, r).unwrap();
            let rhs = q_binomial(d - 1, r - 1).unwrap()
                + q_binomial(d - 1, r).unwrap().shift(r);
            assert_eq!(lhs, rhs, "d={d} r={r}");
        }
    }
}

#[test]
fn q_binomial_at_one_is_ordinary_binomial() {
    let one = BigRational::from_integer(1.into());
    for d in 0..12i64 {
        let mut ordinary = BigInt::from(1);
        for r in 0..=d {
            let v = q_binomial(d, r).unwrap().evaluate(&one).unwrap();
            assert_eq!(v, BigRational::from_integer(ordinary.clone()));
            ordinary = ordinary * (d - r) / (r + 1);
        }
    }
}

#[test]
fn pascal_pair_is_inverse_up_to_eight() {
    for n in 1..=8 {
        let p = pascal_matrix(n);
        let pinv = pascal_inverse(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = LaurentPolyQ::zero();
                for k in 0..n {
                    acc += &(&p[i][k] * &pinv[k][j]);
                }
                let expect = if i == j { LaurentPolyQ::one() } else { LaurentPolyQ::zero() };
                assert_eq!(acc, expect, "n={n} entry ({i},{j})");
            }
        }
    }
}

#[test]
fn euler_identity_for_t_pochhammer() {
    // (t; q)_d = Σ_k (-1)^k q^{C(k,2)} [d choose k] t^k
    for d in 0..7u32 {
        let expect = TPoly::from_coeffs(
            (0..=i64::from(d))
                .map(|k| {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    q_binomial(i64::from(d), k)
                        .unwrap()
                        .shift(binomial2(k))
                        .scale(&BigInt::from(sign))
                })
                .collect(),
        );
        assert_eq!(t_pochhammer(d), expect);
    }
}

#[test]
fn q_pochhammer_degree() {
    for n in 0..8u32 {
        assert_eq!(q_pochhammer(n).max_exp().unwrap(), i64::from(n * (n + 1) / 2));
    }
}
