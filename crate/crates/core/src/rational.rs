//! String form of rationals: `"p/q"` with `q > 0`, lowest terms, and
//! `"0/1"` for zero. Parsing also accepts bare integers.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{Field, RatMatrix, SparseVec, Q};

pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_q(s: &str) -> Result<Q> {
    let bad = || Error::Rational(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

pub fn format_dense(v: &[Q]) -> Vec<String> {
    v.iter().map(format_q).collect()
}

pub fn format_sparse(v: &SparseVec<Q>, len: usize) -> Vec<String> {
    crate::linalg::sparse::to_dense(v, len)
        .iter()
        .map(format_q)
        .collect()
}

pub fn parse_dense(v: &[String]) -> Result<Vec<Q>> {
    v.iter().map(|s| parse_q(s)).collect()
}

/// Row-major array of rational strings.
pub fn matrix_to_strings(m: &RatMatrix) -> Vec<Vec<String>> {
    m.to_dense().iter().map(|r| format_dense(r)).collect()
}

pub fn matrix_from_strings(rows: &[Vec<String>]) -> Result<RatMatrix> {
    let dense = rows
        .iter()
        .map(|r| parse_dense(r))
        .collect::<Result<Vec<_>>>()?;
    RatMatrix::from_dense(dense)
}

/// Serde adapter for a single rational field.
pub mod serde_q {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map_err(serde::de::Error::custom)
    }
}

pub fn is_integral(x: &Q) -> bool {
    x.is_integer() || Field::is_zero(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, qf};
    use proptest::prelude::*;

    #[test]
    fn canonical_strings() {
        assert_eq!(format_q(&q(0)), "0/1");
        assert_eq!(format_q(&qf(4, -6)), "-2/3");
        assert_eq!(format_q(&q(5)), "5/1");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x/2").is_err());
        assert_eq!(parse_q("6/4").unwrap(), qf(3, 2));
        assert_eq!(parse_q("-7").unwrap(), q(-7));
    }

    proptest! {
        #[test]
        fn string_roundtrip(n in -10_000i64..10_000, d in 1i64..10_000) {
            let x = qf(n, d);
            let s = format_q(&x);
            prop_assert_eq!(parse_q(&s).unwrap(), x);
            let (_, den) = s.split_once('/').unwrap();
            prop_assert!(den.parse::<i64>().unwrap() > 0);
        }
    }
}
