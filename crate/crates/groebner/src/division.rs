//! Division with remainder by a list of elements.

use std::ops::Bound;

use crate::{divides, Element, RingElement};

/// The outcome of dividing `f` by `g_1, ..., g_s`: `f = Σ q_i g_i + r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    /// The quotients `q_i`, one per divisor, in divisor order.
    pub quotients: Vec<RingElement>,
    /// The remainder `r`; none of its terms is divisible by a leading monomial.
    pub remainder: Element,
}

/// Divides `f` by `divisors`.
///
/// Repeatedly kills the `≺`-least term of the running remainder that is
/// divisible by some leading monomial, always using the first such divisor
/// in list order.  Since multiplying by `T^k` preserves `≺`, every term
/// introduced by a reduction step is `≻` the term it kills, so a single
/// left-to-right sweep suffices.
///
/// # Panics
///
/// Panics if a divisor is zero or lives over a different prime/truncation.
pub fn divide(f: &Element, divisors: &[Element]) -> Division {
    let field = f.field();
    let leads: Vec<_> = divisors
        .iter()
        .map(|g| {
            assert!(g.same_context(f), "divisor {g:?} does not match dividend {f:?}");
            g.leading_term().expect("division by a zero element")
        })
        .collect();
    let mut r = f.clone();
    let mut quotients = vec![RingElement::zero(); divisors.len()];
    let mut cursor: Bound<crate::Monomial> = Bound::Unbounded;
    loop {
        let step = r.terms_map().range((cursor, Bound::Unbounded)).find_map(|(m, c)| {
            leads
                .iter()
                .enumerate()
                .find_map(|(i, (mu, _))| divides(*mu, *m).map(|k| (i, k, *m, *c)))
        });
        let Some((i, k, m, c)) = step else { break };
        let coef = field.mul(c, field.inv(leads[i].1));
        quotients[i].add_term(field, k, coef);
        r.add_scaled(&divisors[i], field.neg(coef), k);
        cursor = Bound::Excluded(m);
    }
    let division = Division { quotients, remainder: r };
    debug_assert!(
        division.check(f, divisors).is_ok(),
        "unsound division: {:?}",
        division.check(f, divisors)
    );
    division
}

impl Division {
    /// Verifies the defining properties of a division with remainder:
    ///
    /// 1. `f = Σ q_i g_i + r`,
    /// 2. no term of `r` is divisible by any leading monomial,
    /// 3. every term of every `q_i g_i` is `⪰ LT(f)`.
    pub fn check(&self, f: &Element, divisors: &[Element]) -> Result<(), String> {
        let mut sum = self.remainder.clone();
        for (q, g) in self.quotients.iter().zip(divisors) {
            let prod = g.mul_ring(q);
            if let (Some(lf), Some(lp)) = (f.leading_monomial(), prod.leading_monomial()) {
                if lp < lf {
                    return Err(format!("quotient term {lp} precedes LT(f) = {lf}"));
                }
            }
            sum = &sum + &prod;
        }
        if sum != *f {
            return Err(format!("Σ q_i g_i + r = {sum} differs from f = {f}"));
        }
        for (m, _) in self.remainder.terms() {
            if let Some(g) = divisors
                .iter()
                .find(|g| g.leading_monomial().is_some_and(|mu| divides(mu, m).is_some()))
            {
                return Err(format!("remainder term {m} is divisible by LT of {g}"));
            }
        }
        Ok(())
    }
}
