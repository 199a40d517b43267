//! JSON encoding of polynomials and series.
//!
//! A [`TPoly`] is a list of `[t_exp, q_exp, coeff]` triples sorted by
//! `(t_exp, q_exp)`; a [`TSeries`] is `{"num": <poly>, "den": <poly>}`.
//! Coefficients are JSON integers when they fit in 64 bits and decimal
//! strings otherwise; both forms are accepted on input.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::{QAlgebraError, Result, TPoly, TSeries};

fn coeff_to_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(c.to_string()),
    }
}

fn coeff_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| QAlgebraError::Parse(format!("non-integer coefficient {n}"))),
        Value::String(s) => s.parse().map_err(|_| QAlgebraError::Parse(format!("bad coefficient `{s}`"))),
        other => Err(QAlgebraError::Parse(format!("bad coefficient {other}"))),
    }
}

impl TPoly {
    /// Encodes as a JSON list of `[t_exp, q_exp, coeff]` triples.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.triples()
                .iter()
                .map(|(t, q, c)| json!([t, q, coeff_to_json(c)]))
                .collect(),
        )
    }

    /// Decodes the encoding produced by [`TPoly::to_json`].
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || QAlgebraError::Parse(format!("expected [[t, q, c], ...], got {v}"));
        let items = v.as_array().ok_or_else(bad)?;
        let mut triples = Vec::with_capacity(items.len());
        for item in items {
            let arr = item.as_array().filter(|a| a.len() == 3).ok_or_else(bad)?;
            let t = arr[0].as_u64().ok_or_else(bad)? as usize;
            let q = arr[1].as_i64().ok_or_else(bad)?;
            triples.push((t, q, coeff_from_json(&arr[2])?));
        }
        Ok(Self::from_triples(triples))
    }
}

impl TSeries {
    /// Encodes as `{"num": ..., "den": ...}`.
    pub fn to_json(&self) -> Value {
        json!({ "num": self.numerator().to_json(), "den": self.denominator().to_json() })
    }

    /// Decodes the encoding produced by [`TSeries::to_json`].
    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |k: &str| {
            v.get(k).ok_or_else(|| QAlgebraError::Parse(format!("missing field `{k}`")))
        };
        TSeries::new(TPoly::from_json(field("num")?)?, TPoly::from_json(field("den")?)?)
    }
}

impl Serialize for TPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for TPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        TPoly::from_json(&v).map_err(serde::de::Error::custom)
    }
}

impl Serialize for TSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for TSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        TSeries::from_json(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_with_big_coefficients() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = TPoly::from_triples(vec![(0, 0, BigInt::from(1)), (3, -2, big)]);
        let s = TSeries::new(p.clone(), "1 - t".parse().unwrap()).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        let back: TSeries = serde_json::from_str(&text).unwrap();
        assert_eq!(back.numerator(), &p);
        assert!(text.contains("\"123456789012345678901234567890\""));
    }

    #[test]
    fn rejects_malformed() {
        assert!(TPoly::from_json(&json!([[1, 2]])).is_err());
        assert!(TSeries::from_json(&json!({"num": []})).is_err());
    }
}
