//! Text, JSON and CSV renderings of the subcommands.

use std::fmt::Write;

use cusp_qalgebra::{TPoly, TSeries};
use cusp_series::{nh_guess, quot_series, hilb_series, solve_nh, Mode};
use cusp_varieties::{staircase_motive, MotiveTable};
use serde_json::{json, Value};
use thiserror::Error;

/// Largest `D` accepted by `motive` and `conjecture`.
pub const MAX_D: usize = 64;

/// Why a command could not produce output.
#[derive(Debug, Error)]
pub enum RenderError {
    /// Arguments outside the supported range (exit code 2).
    #[error("{0}")]
    Range(String),
}

/// Output format of `series`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesFormat {
    /// One JSON document.
    Json,
    /// Rows `series,part,t_exp,q_exp,coeff`.
    Csv,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| p % k != 0)
}

struct Rendered {
    name: &'static str,
    series: TSeries,
    coefficients: Option<TPoly>,
}

fn series_json(d: usize, mode: Mode, r: &Rendered) -> Value {
    let mut v = json!({
        "d": d,
        "mode": mode.to_string(),
        "num": r.series.numerator().to_json(),
        "den": r.series.denominator().to_json(),
    });
    if let Some(c) = &r.coefficients {
        v["coefficients"] = c.to_json();
    }
    v
}

/// `series --d D [--prime P] [--order K]`: `H_D` and `Q_D` (whose numerators
/// are `NH_D` and `NQ_D`), optionally with their first `K` coefficients.
pub fn series(
    d: usize,
    prime: Option<u64>,
    order: Option<usize>,
    format: SeriesFormat,
) -> Result<String, RenderError> {
    let mode = match prime {
        None if d > 3 => {
            return Err(RenderError::Range(format!(
                "symbolic series are available for d <= 3 (got d = {d}); pass --prime for larger d"
            )))
        }
        None => Mode::Symbolic,
        Some(p) if !is_prime(p) => return Err(RenderError::Range(format!("{p} is not a prime"))),
        Some(p) => Mode::AtPrime(p),
    };
    let range = |e: cusp_series::SeriesError| RenderError::Range(format!("d = {d}, {mode}: {e}"));
    let mut parts = Vec::new();
    for (name, s) in [("hilb", hilb_series(d, mode)), ("quot", quot_series(d, mode))] {
        let series = s.map_err(range)?;
        let coefficients = match order {
            Some(k) if k > 0 => Some(TPoly::from_coeffs(
                series.expand(k - 1).map_err(|e| RenderError::Range(e.to_string()))?,
            )),
            _ => None,
        };
        parts.push(Rendered { name, series, coefficients });
    }
    Ok(match format {
        SeriesFormat::Json => {
            let mut doc = json!({ "d": d, "mode": mode.to_string() });
            doc["nh"] = parts[0].series.numerator().to_json();
            doc["nq"] = parts[1].series.numerator().to_json();
            for r in &parts {
                doc[r.name] = series_json(d, mode, r);
            }
            let mut s = serde_json::to_string(&doc).expect("JSON values serialize");
            s.push('\n');
            s
        }
        SeriesFormat::Csv => {
            let mut out = String::from("series,part,t_exp,q_exp,coeff\n");
            for r in &parts {
                let mut rows = vec![("num", r.series.numerator()), ("den", r.series.denominator())];
                if let Some(c) = &r.coefficients {
                    rows.push(("coeff", c));
                }
                for (part, poly) in rows {
                    for (t, q, c) in poly.triples() {
                        let _ = writeln!(out, "{},{part},{t},{q},{c}", r.name);
                    }
                }
            }
            out
        }
    })
}

/// `motive --d D`: `[V_D]`, or with `csv = true` the table `d,motive` for
/// `d = 0..=D`.
pub fn motive(d: usize, csv: bool) -> Result<String, RenderError> {
    if d > MAX_D {
        return Err(RenderError::Range(format!("motive supports d <= {MAX_D} (got d = {d})")));
    }
    Ok(if csv { MotiveTable::new(d).motive_csv() } else { format!("{}\n", staircase_motive(d)) })
}

/// `motive --table A B`: the class of the stratum `dim ker A = a`,
/// `rank A = b` of `V_d`, `2d = a + b`.
pub fn motive_stratum(a: u32, b: u32) -> Result<String, RenderError> {
    let d = (a + b).div_ceil(2) as usize;
    if d > MAX_D {
        return Err(RenderError::Range(format!("motive supports a + b <= {} (got {})", 2 * MAX_D, a + b)));
    }
    Ok(format!("{}\n", MotiveTable::new(d).get(a, b)))
}

/// `conjecture --max-d D`: solves the recursion rank by rank and compares
/// with the closed form.  Returns the report and whether every rank agreed.
pub fn conjecture(max_d: usize) -> Result<(String, bool), RenderError> {
    if max_d > MAX_D {
        return Err(RenderError::Range(format!("conjecture supports D <= {MAX_D} (got {max_d})")));
    }
    let mut out = String::new();
    let mut known: Vec<TPoly> = Vec::new();
    for d in 0..=max_d {
        match solve_nh(d, &known) {
            Ok(f) => {
                let matches = f == nh_guess(d);
                let verdict = if matches { "matches closed form" } else { "differs from closed form" };
                let _ = writeln!(out, "d={d}: consistent, {verdict}");
                known.push(f);
                if !matches {
                    return Ok((out, false));
                }
            }
            Err(e) => {
                let _ = writeln!(out, "d={d}: inconsistent: {e}");
                return Ok((out, false));
            }
        }
    }
    Ok((out, true))
}
