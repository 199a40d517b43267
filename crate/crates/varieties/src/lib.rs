//! Staircase matrix varieties.
//!
//! For a pure-`K` leading-term datum `α` of rank `d`, the central stratum is
//! the variety `V(α)` of strictly upper triangular pairs `(X, Y)` with
//! `X² = Y³`, `XY = YX`, and entries forced to vanish according to the
//! truncated pairwise distances of `α`.  When every distance is at least 3
//! this is the staircase variety `V_d`, whose motive is computed by a
//! recursion over the strata `V_(a,b)` cut out by `a = dim ker A`,
//! `b = rank A` for the operator `A = [[X, -Y²], [-Y, X]]` on `M ⊕ M`.
//!
//! This crate provides
//!
//! * exact point counts of `V(α)` and `V_d` over prime fields,
//! * the built-in distance-class tables of `[V(α)]` for `d <= 3`,
//! * the stratum motives `[V_(a,b)]` and `[V_d]` ([`MotiveTable`]),
//! * the dimension profile of `A`, `A'`, `T` at a point ([`AbProfile`]).

mod count;
mod error;
mod gf;
mod motive;
mod profile;
mod spec;
mod tables;

pub use count::{
    brute_v_d, brute_v_d_with_budget, count_v_alpha, count_v_alpha_with_budget, v_alpha_points,
    Budget,
};
pub use error::VarietyError;
pub use gf::GfMatrix;
pub use motive::{staircase_motive, MotiveTable};
pub use profile::{ab_profile, extend, is_on_v_d, AbProfile, ExtensionCase, StaircaseOperators};
pub use spec::{DistanceClass, VAlphaSpec};
pub use tables::{motive_v_alpha, pure_k_table, symbolic_v_alpha};
