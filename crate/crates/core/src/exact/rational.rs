//! Arbitrary-precision rationals.
//!
//! `Rational` is `num_rational::BigRational`, which keeps numerator and
//! denominator coprime with a positive denominator. Its `Display` already
//! produces the wire format (`"p/q"`, or `"p"` when `q = 1`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let trimmed = s.trim();
    let parsed: Rational = trimmed
        .parse()
        .map_err(|_| Error::Parse(format!("not a rational: {s:?}")))?;
    Ok(parsed)
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Serde adapter writing rationals as exact strings.
pub mod as_string {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(de)?;
        parse_rational(&s).map_err(D::Error::custom)
    }
}

/// Serde adapter for sequences of rationals.
pub mod vec_as_string {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&format_rational(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Rational>, D::Error> {
        let raw = Vec::<String>::deserialize(de)?;
        raw.iter()
            .map(|s| parse_rational(s).map_err(D::Error::custom))
            .collect()
    }
}
