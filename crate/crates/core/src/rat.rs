//! Exact rational scalars and their `"p/q"` string codec.

use num_rational::Rational64;
use num_traits::Signed;

use crate::error::{Error, Result};

/// The scalar type of the whole crate: an exact rational with 64-bit
/// numerator and denominator. Desk-scale root-system arithmetic stays far
/// away from the overflow range.
pub type Rat = Rational64;

/// Renders `r` as `"p"` for integers and `"p/q"` otherwise.
pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"`.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let mk_err = || Error::InvalidInput(format!("cannot parse rational '{s}'"));
    match s.split_once('/') {
        None => s
            .parse::<i64>()
            .map(Rat::from_integer)
            .map_err(|_| mk_err()),
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| mk_err())?;
            let q: i64 = q.trim().parse().map_err(|_| mk_err())?;
            if q == 0 {
                return Err(mk_err());
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// `|r|`.
pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

/// True when `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.is_integer()
}

/// True when `2 r` is an integer (ρ-shifted coordinates).
pub fn is_half_integer(r: &Rat) -> bool {
    (r * Rat::from_integer(2)).is_integer()
}

/// Exact integer value of `r`; error if it is not integral.
pub fn to_integer(r: &Rat) -> Result<i64> {
    if r.is_integer() {
        Ok(*r.numer())
    } else {
        Err(Error::InvalidInput(format!(
            "{} is not an integer",
            rat_to_string(r)
        )))
    }
}

/// Floor of a rational, as an `i64`.
pub fn floor(r: &Rat) -> i64 {
    *r.floor().numer()
}

/// Ceiling of a rational, as an `i64`.
pub fn ceil(r: &Rat) -> i64 {
    *r.ceil().numer()
}

/// Serde codec serializing rationals as `"p/q"` strings.
pub mod serde_rat {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&rat_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        rat_from_str(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde codec for vectors of rationals.
pub mod serde_rat_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(rat_to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rat>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| rat_from_str(s).map_err(serde::de::Error::custom))
            .collect()
    }
}
