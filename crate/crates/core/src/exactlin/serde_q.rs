//! Serde adapters writing rationals as `"p/q"` strings.
//!
//! Integer JSON numbers are accepted on input as a convenience.

use serde::{Deserialize, Deserializer, Serializer};

use super::{format_rational, int, parse_rational, Rational};

#[derive(Deserialize)]
#[serde(untagged)]
enum Raw {
    Str(String),
    Int(i64),
}

fn from_raw<E: serde::de::Error>(r: Raw) -> Result<Rational, E> {
    match r {
        Raw::Str(s) => parse_rational(&s).map_err(E::custom),
        Raw::Int(n) => Ok(int(n)),
    }
}

pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    from_raw(Raw::deserialize(d)?)
}

pub mod vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for q in v {
            seq.serialize_element(&format_rational(q))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<Raw>::deserialize(d)?
            .into_iter()
            .map(from_raw::<D::Error>)
            .collect()
    }
}

/// Parses one JSON value as a rational.
pub fn from_value(v: &serde_json::Value) -> Result<Rational, String> {
    match v {
        serde_json::Value::String(s) => parse_rational(s).map_err(|e| e.to_string()),
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(int)
            .ok_or_else(|| format!("non-integer number {n}; write fractions as strings")),
        other => Err(format!("expected a rational string, found {other}")),
    }
}
