//! Prebases and Buchberger-type Gröbner criteria.

use std::collections::BTreeMap;

use crate::{divide, divides, lcm_set, Element, GroebnerError, Monomial};

/// A list of monic elements with mutually indivisible leading monomials,
/// no non-leading term of which is divisible by any leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreBasis {
    elements: Vec<Element>,
}

impl PreBasis {
    /// Validates the prebasis conditions.
    pub fn new(elements: Vec<Element>) -> Result<Self, GroebnerError> {
        if let Some(first) = elements.first() {
            if let Some(bad) = elements.iter().find(|e| !e.same_context(first)) {
                return Err(GroebnerError::MismatchedContext(format!("{bad:?} vs {first:?}")));
            }
        }
        let mut leads = Vec::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            let (m, c) = e.leading_term().ok_or(GroebnerError::ZeroElement(i))?;
            if c != 1 {
                return Err(GroebnerError::NotMonic(i));
            }
            leads.push(m);
        }
        for (i, a) in leads.iter().enumerate() {
            for (j, b) in leads.iter().enumerate() {
                if i != j && divides(*a, *b).is_some() {
                    return Err(GroebnerError::DivisibleLeadingTerms(i.min(j), i.max(j)));
                }
            }
        }
        for (i, e) in elements.iter().enumerate() {
            let reducible = e
                .terms()
                .skip(1)
                .any(|(m, _)| leads.iter().any(|mu| divides(*mu, m).is_some()));
            if reducible {
                return Err(GroebnerError::NonReducedTerm { element: i });
            }
        }
        Ok(Self { elements })
    }

    /// The elements, in the order supplied.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    /// Leading monomials, in element order.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().filter_map(Element::leading_monomial).collect()
    }
}

/// The S-elements `(ν/μ_i) g_i - (ν/μ_j) g_j` for all `ν` in the LCM set of
/// the leading monomials of two monic elements.
pub fn s_elements(gi: &Element, gj: &Element) -> Vec<Element> {
    let (Some(mi), Some(mj)) = (gi.leading_monomial(), gj.leading_monomial()) else {
        return Vec::new();
    };
    lcm_set(mi, mj)
        .into_iter()
        .map(|nu| {
            let ki = divides(mi, nu).expect("lcm is a multiple");
            let kj = divides(mj, nu).expect("lcm is a multiple");
            let mut s = gi.monic().mul_t(ki);
            s.add_scaled(&gj.monic(), gi.field().p() - 1, kj);
            s
        })
        .collect()
}

/// Buchberger's criterion over all pairs: every S-element of every pair of
/// generators with the same leading basis index reduces to zero.
///
/// Valid for arbitrary generating lists of nonzero elements.
pub fn buchberger_general(gens: &[Element]) -> bool {
    let gens: Vec<Element> = gens.iter().filter(|g| !g.is_zero()).map(Element::monic).collect();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            for s in s_elements(&gens[i], &gens[j]) {
                if !divide(&s, &gens).remainder.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// The cusp-specialized Gröbner test for a prebasis.
///
/// Two indivisible monomials on the same basis vector differ by exactly one
/// T-degree, so the only pairs with nonempty LCM set are the pairs
/// `(g^0, g^1)` with leading monomials `T^{a+2} u_i`, `T^{a+3} u_i`.  Their two
/// S-elements are `T^3 g^0 - T^2 g^1` and `T^4 g^0 - T^3 g^1`; the prebasis is
/// a Gröbner basis iff all of them reduce to zero.
pub fn is_groebner(basis: &PreBasis) -> bool {
    let mut by_basis: BTreeMap<u32, Vec<&Element>> = BTreeMap::new();
    for e in basis.elements() {
        let lm = e.leading_monomial().expect("prebasis elements are nonzero");
        by_basis.entry(lm.basis).or_default().push(e);
    }
    let p = basis.elements().first().map_or(2, |e| e.field().p());
    for mut pair in by_basis.into_values().filter(|v| v.len() == 2) {
        pair.sort_by_key(|e| e.leading_monomial());
        let (g0, g1) = (pair[0], pair[1]);
        for (k0, k1) in [(3, 2), (4, 3)] {
            let mut s = g0.mul_t(k0);
            s.add_scaled(g1, p - 1, k1);
            if !divide(&s, basis.elements()).remainder.is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::PrimeField;

    fn el(p: u64, terms: &[(u32, u32, i64)]) -> Element {
        let f = PrimeField::new(p).unwrap();
        Element::from_terms(f, 14, terms.iter().map(|&(k, i, c)| (Monomial::new(k, i), c))).unwrap()
    }

    #[test]
    fn prebasis_validation() {
        assert!(PreBasis::new(vec![el(3, &[(2, 1, 1)]), el(3, &[(4, 1, 1)])]).is_err());
        assert!(PreBasis::new(vec![el(3, &[(2, 1, 2)])]).is_err());
        assert!(PreBasis::new(vec![el(3, &[(2, 1, 1), (4, 1, 1)])]).is_err());
        assert!(PreBasis::new(vec![el(3, &[(2, 1, 1), (3, 1, 1)])]).is_ok());
    }

    #[test]
    fn monomial_prebases_are_groebner() {
        let pb = PreBasis::new(vec![el(2, &[(2, 1, 1)]), el(2, &[(3, 1, 1)])]).unwrap();
        assert!(is_groebner(&pb));
        assert!(buchberger_general(pb.elements()));
    }

    #[test]
    fn a_non_groebner_prebasis() {
        // g0 = T^2 + T^3 is not allowed (T^3 is a leading monomial); use g0 =
        // T^2 u1 + T^2 u2, g1 = T^3 u1: then T^3 g0 - T^2 g1 = T^5 u2 must reduce.
        let pb = PreBasis::new(vec![
            el(2, &[(2, 1, 1), (2, 2, 1)]),
            el(2, &[(3, 1, 1)]),
            el(2, &[(2, 2, 1), (3, 2, 1)]).monic(),
        ]);
        assert!(pb.is_err(), "T^2 u2 is divisible by the third leading monomial");
        let pb = PreBasis::new(vec![el(2, &[(2, 1, 1), (3, 2, 1)]), el(2, &[(3, 1, 1)])]).unwrap();
        // S = T^3 g0 - T^2 g1 = T^6 u2, which no leading monomial divides.
        assert!(!is_groebner(&pb));
        assert!(!buchberger_general(pb.elements()));
    }
}
