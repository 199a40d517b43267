//! Combinatorics of leading-term data for the cusp `R = k[[T^2, T^3]]`.
//!
//! A leading-term datum `α = (I_1, ..., I_d)` assigns to each basis vector
//! (a *seat*) a monomial ideal `J(a)` or `K(a)` of `R`.  It is encoded by a
//! **level vector** (seat-indexed; `J(a)` has level `a - 1`, `K(a)` has level
//! `a`) and a **color vector** (rank-indexed), where the *rank order* sorts
//! components by `(level, seat)`.  Keeping colors rank-indexed makes them
//! invariant under the spiral-raising operators `γ_j`, which move levels
//! between seats.
//!
//! The crate provides the spiral-raising action of `N^d` on level vectors,
//! distance matrices and stretches, stability, orbit addresses, the
//! exponents `b(α)` and `δ(α)` of the point-count factorization, and the
//! canonical stable orbit decomposition of all data of rank `d`.

mod datum;
mod error;
mod levels;
mod orbits;

pub use cusp_groebner::{CuspIdeal, Monomial};
pub use datum::{enumerate_data, Color, LeadingTermDatum};
pub use error::StrataError;
pub use levels::{
    apply_address, distance, distance_matrix, enumerate_levels, gamma, gamma_inverse,
    orbit_address, rank_order, stretches, DistanceMatrix,
};
pub use orbits::{box_generator_bound, orbit_count, stable_orbit_decomposition, StableOrbit};
