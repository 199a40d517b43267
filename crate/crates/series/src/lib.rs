//! Generating series of the cusp `R = F_q[[T^2, T^3]]`.
//!
//! * `H_d(t)`, the framed Cohen–Lenstra series of rank `d`, assembled from
//!   Gröbner strata along the stable orbit decomposition ([`hilb_series`]);
//! * the Quot zeta function `Q_d(t)` and its inversion back to `H_d`;
//! * the Cohen–Lenstra coefficients `[t^n] ẑ`;
//! * the conjectured closed form of `NH_d = (t;q)_d H_d`, the recursion that
//!   pins it down, its functional equation, root-of-unity values and
//!   cyclotomic factors;
//! * the matrix-pair count predicted by the conjectured `ẑ`.

mod cohen_lenstra;
mod conjecture;
mod error;
mod hilb;
mod quot;

pub use cohen_lenstra::{
    affine_guess_coefficient, cohen_lenstra_guess_coefficient, matrix_count_formula,
    times_gl_order,
};
pub use conjecture::{
    cyclotomic_divisibility_check, cyclotomic_divisor, functional_equation_check, nh_guess,
    p_at_minus_one, root_of_unity_check, solve_nh, solve_nh_chain, theta, theta_rhs,
};
pub use error::SeriesError;
pub use hilb::{color_numerator, hilb_series, nh, nh_unspecialized, Mode, StratumClasses};
pub use quot::{hilb_from_quot, nq, nq_from_nh, quot_series, zhat_from_hilb, zhat_truncation};
