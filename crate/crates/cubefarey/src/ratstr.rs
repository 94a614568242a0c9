//! Exact rational <-> string conversion used by every persisted format.
//!
//! Rationals print as `num/den` in lowest terms, with the `/den` part
//! dropped for integers, e.g. "5/2", "-7/3", "4". No floating point is
//! ever written.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::str::FromStr;

pub fn to_string(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num)
        .map_err(|_| Error::invalid(format!("bad rational {s:?}")))?;
    let den = BigInt::from_str(den)
        .map_err(|_| Error::invalid(format!("bad rational {s:?}")))?;
    if den == BigInt::from(0) {
        return Err(Error::invalid(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

pub fn parse_triple(s: &str) -> Result<[BigRational; 3]> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::invalid(format!(
            "expected three comma-separated rationals, got {s:?}"
        )));
    }
    Ok([parse(parts[0])?, parse(parts[1])?, parse(parts[2])?])
}

/// Serde adapter for a single rational.
pub mod one {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for a `[BigRational; 3]` coordinate vector.
pub mod arr3 {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        a: &[BigRational; 3],
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = a.iter().map(to_string).collect();
        serde::Serialize::serialize(&v, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<[BigRational; 3], D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        if v.len() != 3 {
            return Err(serde::de::Error::custom("expected three rationals"));
        }
        let mut out = [
            BigRational::from_integer(0.into()),
            BigRational::from_integer(0.into()),
            BigRational::from_integer(0.into()),
        ];
        for (slot, s) in out.iter_mut().zip(&v) {
            *slot = parse(s).map_err(serde::de::Error::custom)?;
        }
        Ok(out)
    }
}

/// Serde adapter for a two-element interval `[lo, hi]`.
pub mod arr2 {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        a: &(BigRational, BigRational),
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let v = [to_string(&a.0), to_string(&a.1)];
        serde::Serialize::serialize(&v, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<(BigRational, BigRational), D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        if v.len() != 2 {
            return Err(serde::de::Error::custom("expected [lo, hi]"));
        }
        let lo = parse(&v[0]).map_err(serde::de::Error::custom)?;
        let hi = parse(&v[1]).map_err(serde::de::Error::custom)?;
        Ok((lo, hi))
    }
}
