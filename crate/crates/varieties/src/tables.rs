//! Symbolic classes `[V(α)]` for pure-`K` data of rank at most 3.

use cusp_qalgebra::LaurentPolyQ;

use crate::{staircase_motive, DistanceClass, VAlphaSpec, VarietyError};

use DistanceClass::{AtLeastThree as C3, AtMostOne as C1, Two as C2};

/// Rank 2: keyed by `δ12`.
const TABLE_2: [(DistanceClass, &str); 3] = [(C1, "1"), (C2, "q"), (C3, "q^2")];

/// Rank 3: keyed by `(δ12, δ23, δ13)`.
const TABLE_3: [([DistanceClass; 3], &str); 13] = [
    ([C1, C1, C1], "1"),
    ([C1, C1, C2], "q"),
    ([C1, C1, C3], "q^2"),
    ([C1, C2, C2], "q^2"),
    ([C1, C2, C3], "q^3"),
    ([C1, C3, C3], "q^4"),
    ([C2, C1, C2], "q^2"),
    ([C2, C1, C3], "q^3"),
    ([C2, C2, C3], "q^4"),
    ([C2, C3, C3], "2q^4 - q^3"),
    ([C3, C1, C3], "q^4"),
    ([C3, C2, C3], "2q^4 - q^3"),
    ([C3, C3, C3], "3q^4 - 2q^3"),
];

fn parse(s: &str) -> LaurentPolyQ {
    s.parse().expect("built-in table entries parse")
}

/// The rows of the built-in table for rank `d <= 3`, as `(spec, [V(α)])`.
///
/// Rank-3 specs are built from the key `(δ12, δ23, δ13)`.
pub fn pure_k_table(d: usize) -> Result<Vec<(VAlphaSpec, LaurentPolyQ)>, VarietyError> {
    match d {
        0 | 1 => Ok(vec![(VAlphaSpec::stable(d), LaurentPolyQ::one())]),
        2 => TABLE_2
            .iter()
            .map(|&(c, v)| Ok((VAlphaSpec::from_classes(2, vec![c])?, parse(v))))
            .collect(),
        3 => TABLE_3
            .iter()
            .map(|&([c12, c23, c13], v)| {
                Ok((VAlphaSpec::from_classes(3, vec![c12, c13, c23])?, parse(v)))
            })
            .collect(),
        _ => Err(VarietyError::SymbolicRange { d }),
    }
}

/// `[V(α)]` from the distance-class tables (`d <= 3`).
pub fn symbolic_v_alpha(spec: &VAlphaSpec) -> Result<LaurentPolyQ, VarietyError> {
    pure_k_table(spec.d())?
        .into_iter()
        .find(|(s, _)| s == spec)
        .map(|(_, v)| v)
        .ok_or_else(|| VarietyError::UnknownClass(spec.to_string()))
}

/// `[V(α)]` wherever it is known symbolically: the tables for `d <= 3`, and
/// the staircase motive `[V_d]` for fully stable data of any rank.
pub fn motive_v_alpha(spec: &VAlphaSpec) -> Result<LaurentPolyQ, VarietyError> {
    if spec.d() <= 3 {
        symbolic_v_alpha(spec)
    } else if spec.is_fully_stable() {
        Ok(staircase_motive(spec.d()))
    } else {
        Err(VarietyError::SymbolicRange { d: spec.d() })
    }
}
