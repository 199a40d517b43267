//! A small parser for sums of monomials `c * q^a * t^b`.
//!
//! The accepted syntax is deliberately forgiving so that tables can be
//! transcribed verbatim: `3*q^4 - 2*q^3`, `q^6t^2 + 2q^6 t^3`, `q^-1`,
//! `q^(-2)`, `-t`, `7`.  Factors may be separated by `*`, whitespace or
//! nothing at all.

use num_bigint::BigInt;
use num_traits::One;

use crate::{QAlgebraError, Result};

/// Parses `s` into `(t_exponent, q_exponent, coefficient)` triples.
///
/// Repeated monomials are returned as separate triples; callers sum them.
pub fn parse_terms(s: &str) -> Result<Vec<(i64, i64, BigInt)>> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |msg: &str| QAlgebraError::Parse(format!("{msg} in `{s}`"));
    if chars.is_empty() {
        return Err(err("empty input"));
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let mut sign = BigInt::one();
        match chars[i] {
            '+' => i += 1,
            '-' => {
                sign = -sign;
                i += 1;
            }
            _ if i > 0 => return Err(err("expected `+` or `-`")),
            _ => {}
        }
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: BigInt = if i > start {
            chars[start..i].iter().collect::<String>().parse().map_err(|_| err("bad integer"))?
        } else {
            BigInt::one()
        };
        let (mut te, mut qe) = (0i64, 0i64);
        let mut saw_factor = i > start;
        loop {
            if i < chars.len() && chars[i] == '*' {
                i += 1;
            }
            if i >= chars.len() || !matches!(chars[i], 'q' | 't') {
                break;
            }
            let var = chars[i];
            i += 1;
            let mut e = 1i64;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let paren = i < chars.len() && chars[i] == '(';
                if paren {
                    i += 1;
                }
                let neg = i < chars.len() && chars[i] == '-';
                if neg {
                    i += 1;
                }
                let es = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if es == i {
                    return Err(err("missing exponent"));
                }
                e = chars[es..i].iter().collect::<String>().parse().map_err(|_| err("bad exponent"))?;
                if neg {
                    e = -e;
                }
                if paren {
                    if i >= chars.len() || chars[i] != ')' {
                        return Err(err("unbalanced parenthesis"));
                    }
                    i += 1;
                }
            }
            if var == 'q' {
                qe += e;
            } else {
                te += e;
            }
            saw_factor = true;
        }
        if !saw_factor {
            return Err(err("empty term"));
        }
        if i < chars.len() && !matches!(chars[i], '+' | '-') {
            return Err(err(&format!("unexpected character `{}`", chars[i])));
        }
        out.push((te, qe, sign * coeff));
    }
    Ok(out)
}
