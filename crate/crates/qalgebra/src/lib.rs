//! Exact arithmetic in `Z[q, q^-1]` and in power series over it.
//!
//! The generating functions in this workspace live in `Z[q, q^-1][[t]]` and
//! are always rational in `t`: a numerator polynomial over a denominator
//! whose constant term is a unit `±q^k`.  This crate provides
//!
//! * [`LaurentPolyQ`] — Laurent polynomials in `q` with big-integer
//!   coefficients,
//! * [`RationalQ`] — formal quotients of Laurent polynomials,
//! * [`TPoly`] — polynomials in `t` with [`LaurentPolyQ`] coefficients,
//! * [`TSeries`] — rational series `num / den` with exact expansion,
//! * q-Pochhammer symbols, q-binomial coefficients and the q-Pascal
//!   inversion pair ([`qcomb`]),
//! * evaluation at rational points and at roots of unity ([`cyclotomic`]),
//! * a small textual parser for writing polynomials in tests and tables
//!   ([`parse`]) and a JSON encoding ([`json`]).

pub mod cyclotomic;
mod error;
pub mod json;
mod laurent;
pub mod parse;
pub mod qcomb;
mod rational;
mod series;
mod tpoly;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, evaluate_q, reduce_mod_cyclotomic, QEval, QValue};
pub use error::QAlgebraError;
pub use laurent::LaurentPolyQ;
pub use qcomb::{
    binomial2, gl_order, pascal_inverse, pascal_matrix, q_binomial, q_binomial_inv,
    q_pochhammer, q_pochhammer_inv, t_pochhammer, t_pochhammer_range,
};
pub use rational::RationalQ;
pub use series::TSeries;
pub use tpoly::TPoly;

/// Convenience alias for results produced by this crate.
pub type Result<T> = std::result::Result<T, QAlgebraError>;
