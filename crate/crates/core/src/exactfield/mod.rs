//! Exact arithmetic: rationals, univariate polynomials and rational functions
//! over ℚ, multivariate polynomials for symmetric-algebra coefficients, and
//! dense matrices over both fields.

mod matrix;
mod mpoly;
mod poly;
mod ratfun;

pub use matrix::{Matrix, QMatrix, RatMatrix};
pub use mpoly::MPoly;
pub use poly::UniPoly;
pub use ratfun::{RatFun, Valuation};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(x: &Q) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Parses "3/2", "-1", "0".
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("malformed rational literal {s:?}"));
    if s.is_empty() || s.contains('.') || s.contains('e') {
        return Err(bad());
    }
    let r: Q = s.parse().map_err(|_| bad())?;
    if r.denom().is_zero() {
        return Err(bad());
    }
    Ok(r)
}

/// Parses a comma separated list of rationals, e.g. "3/2,1/2".
pub fn parse_q_vec(s: &str) -> Result<Vec<Q>> {
    s.split(',').map(parse_q).collect()
}

pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn fmt_q_vec(v: &[Q]) -> String {
    v.iter().map(fmt_q).collect::<Vec<_>>().join(",")
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Serde helpers writing rationals as exact strings.
pub mod qser {
    use super::{fmt_q, parse_q, Q};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use super::super::{fmt_q, parse_q, Q};
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        pub fn serialize<S: Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
            v.iter().map(fmt_q).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
            let v = Vec::<String>::deserialize(d)?;
            v.iter()
                .map(|s| parse_q(s).map_err(serde::de::Error::custom))
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/2", "-1", "0", "7", "-5/3"] {
            assert_eq!(fmt_q(&parse_q(s).unwrap()), s);
        }
        assert_eq!(parse_q("6/4").unwrap(), qf(3, 2));
        assert!(parse_q("1.5").is_err());
        assert!(parse_q("x").is_err());
        assert!(parse_q("1/0").is_err());
    }

    #[test]
    fn vector_literal() {
        assert_eq!(parse_q_vec("3/2,1/2").unwrap(), vec![qf(3, 2), qf(1, 2)]);
    }
}
