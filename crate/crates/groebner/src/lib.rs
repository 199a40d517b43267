//! Gröbner bases for submodules of `F = R^d`, `R = F_p[[T^2, T^3]]`.
//!
//! Monomials are `T^k u_i` with `k` in the semigroup `{0, 2, 3, ...}`; the
//! elements manipulated here live in the maximal-ideal submodule `mF`, so all
//! T-degrees are at least 2.  The term order compares `(T-degree, basis
//! index)` and the *leading* term of an element is its `≺`-least term, which
//! is the right convention for a local ring.
//!
//! Elements are truncated modulo `T^N F`.  [`reduce`] certifies that the
//! truncation does not change the answer (see its documentation) and refuses
//! otherwise.

mod division;
mod element;
mod error;
mod field;
mod ideal;
mod monomial;
mod prebasis;
mod reduce;

pub use division::{divide, Division};
pub use element::{Element, RingElement};
pub use error::GroebnerError;
pub use field::PrimeField;
pub use ideal::CuspIdeal;
pub use monomial::{divides, in_semigroup, lcm_set, Monomial};
pub use prebasis::{buchberger_general, is_groebner, s_elements, PreBasis};
pub use reduce::{reduce, ReducedGB};
