//! Reduced Gröbner bases of finite-codimension submodules of `mF`.

use std::collections::VecDeque;
use std::fmt;

use crate::{
    divide, divides, s_elements, CuspIdeal, Element, GroebnerError, Monomial, PreBasis,
};

/// The reduced Gröbner basis of a submodule `M ⊆ mF` of finite codimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGB {
    rank: u32,
    basis: PreBasis,
    standard: Vec<Monomial>,
    datum: Vec<CuspIdeal>,
}

impl ReducedGB {
    /// The rank `d` of the ambient free module.
    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// The basis, sorted by leading monomial.
    pub fn basis(&self) -> &PreBasis {
        &self.basis
    }

    /// The basis elements, sorted by leading monomial.
    pub fn elements(&self) -> &[Element] {
        self.basis.elements()
    }

    /// The leading-term datum: the monomial ideal `I_i` with `LT(M) = ⊕ I_i u_i`.
    pub fn datum(&self) -> &[CuspIdeal] {
        &self.datum
    }

    /// Standard monomials (those of `mF` outside `LT(M)`), increasing.
    pub fn standard_monomials(&self) -> &[Monomial] {
        &self.standard
    }

    /// `dim mF / M`.
    pub fn codim(&self) -> usize {
        self.standard.len()
    }

    /// Whether `f` lies in `M`.
    pub fn contains(&self, f: &Element) -> bool {
        divide(f, self.elements()).remainder.is_zero()
    }
}

impl fmt::Display for ReducedGB {
    /// One basis element per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in self.elements() {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Computes the reduced Gröbner basis of the submodule generated by
/// `generators` inside `F = R^rank`.
///
/// All work happens in `mF / T^N F` where `N` is the common truncation order
/// of the generators, so the computed object is the basis of `M + T^N F`.
/// When its codimension `c` satisfies `2c + 4 <= N`, `M` already contains
/// `T^{c+3} F` and hence `T^N F`, so the answer is exact; otherwise the
/// function refuses with [`GroebnerError::CodimExceedsTruncation`].
///
/// Steps: Buchberger completion over LCM sets, minimalization (drop elements
/// whose leading monomial is divisible by another), then autoreduction
/// `g_i <- μ_i - (μ_i mod G)`.
pub fn reduce(generators: &[Element], rank: u32) -> Result<ReducedGB, GroebnerError> {
    let Some(first) = generators.first() else {
        return Err(GroebnerError::ZeroSubmodule);
    };
    let (field, trunc) = (first.field(), first.trunc());
    for g in generators {
        if !g.same_context(first) {
            return Err(GroebnerError::MismatchedContext(format!("{g:?} vs {first:?}")));
        }
        if let Some((m, _)) = g.terms().find(|(m, _)| m.basis == 0 || m.basis > rank) {
            return Err(GroebnerError::BasisOutOfRange { basis: m.basis, rank });
        }
    }
    let mut gens: Vec<Element> =
        generators.iter().filter(|g| !g.is_zero()).map(Element::monic).collect();
    if gens.is_empty() {
        return Err(GroebnerError::ZeroSubmodule);
    }

    // Buchberger completion.
    let mut pairs: VecDeque<(usize, usize)> =
        (0..gens.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop_front() {
        for s in s_elements(&gens[i], &gens[j]) {
            let r = divide(&s, &gens).remainder;
            if !r.is_zero() {
                gens.push(r.monic());
                let k = gens.len() - 1;
                pairs.extend((0..k).map(|i| (i, k)));
            }
        }
    }

    // Minimalization: keep one element per minimal leading monomial.
    gens.sort_by_key(|g| g.leading_monomial());
    let mut minimal: Vec<Element> = Vec::new();
    for g in gens {
        let lm = g.leading_monomial().expect("nonzero");
        if !minimal.iter().any(|h| divides(h.leading_monomial().unwrap(), lm).is_some()) {
            minimal.push(g);
        }
    }

    // Autoreduction.
    let reduced: Vec<Element> = minimal
        .iter()
        .map(|g| {
            let mu = Element::monomial(field, trunc, g.leading_monomial().unwrap(), 1);
            &mu - &divide(&mu, &minimal).remainder
        })
        .collect();
    let basis = PreBasis::new(reduced).expect("autoreduced minimal basis is a prebasis");

    let leads = basis.leading_monomials();
    let mut datum = Vec::with_capacity(rank as usize);
    for i in 1..=rank {
        let exps: Vec<u32> = leads.iter().filter(|m| m.basis == i).map(|m| m.t_deg).collect();
        let ideal = CuspIdeal::from_generators(&exps).ok_or(GroebnerError::InfiniteCodimension(i))?;
        datum.push(ideal);
    }
    let standard: Vec<Monomial> = (2..trunc)
        .flat_map(|k| (1..=rank).map(move |i| Monomial::new(k, i)))
        .filter(|m| !leads.iter().any(|mu| divides(*mu, *m).is_some()))
        .collect();
    let codim = standard.len();
    if 2 * codim + 4 > trunc as usize {
        return Err(GroebnerError::CodimExceedsTruncation { codim, trunc });
    }
    Ok(ReducedGB { rank, basis, standard, datum })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::PrimeField;

    fn el(p: u64, trunc: u32, terms: &[(u32, u32, i64)]) -> Element {
        let f = PrimeField::new(p).unwrap();
        Element::from_terms(f, trunc, terms.iter().map(|&(k, i, c)| (Monomial::new(k, i), c)))
            .unwrap()
    }

    #[test]
    fn rank_one_principal_ideals() {
        // (T^2 + T^3) = T^2 (1 + T) has leading ideal (T^2) = J(1).
        let gb = reduce(&[el(3, 12, &[(2, 1, 1), (3, 1, 1)])], 1).unwrap();
        assert_eq!(gb.datum(), &[CuspIdeal::J(1)]);
        assert_eq!(gb.codim(), 1);
        assert_eq!(gb.standard_monomials(), &[Monomial::new(3, 1)]);
        // The reduced generator is T^2 + c T^3.
        assert_eq!(gb.to_string(), "T^2*u1 + T^3*u1\n");
    }

    #[test]
    fn ideal_generated_by_two_monomials() {
        let gb = reduce(&[el(2, 12, &[(4, 1, 1)]), el(2, 12, &[(5, 1, 1)])], 1).unwrap();
        assert_eq!(gb.datum(), &[CuspIdeal::K(2)]);
        assert_eq!(gb.codim(), 2);
    }

    #[test]
    fn refuses_uncertified_truncation() {
        let err = reduce(&[el(2, 8, &[(7, 1, 1)])], 1).unwrap_err();
        assert!(matches!(err, GroebnerError::CodimExceedsTruncation { .. }));
        let err = reduce(&[el(2, 12, &[(2, 1, 1)])], 2).unwrap_err();
        assert_eq!(err, GroebnerError::InfiniteCodimension(2));
        assert_eq!(reduce(&[], 1).unwrap_err(), GroebnerError::ZeroSubmodule);
    }
}
