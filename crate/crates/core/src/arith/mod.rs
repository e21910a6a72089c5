//! Exact arithmetic over ℚ: rationals, sparse multivariate polynomials,
//! univariate and binary forms, small dense matrices.

pub mod binary;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod univariate;

pub use binary::{binary_form_gcd, BinaryForm};
pub use monomial::Monomial;
pub use parse::{parse_point, parse_poly};
pub use poly::{poly_arith, MultiPoly, PolyOp, Vars};
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
pub use univariate::{IsolatingInterval, UniPoly};

use crate::error::Result;

/// Isolates the real roots of a polynomial that involves at most one variable.
pub fn isolate_real_roots(p: &MultiPoly) -> Result<Vec<IsolatingInterval>> {
    let var = p.support().first().copied().unwrap_or(0);
    p.to_univariate(var)?.isolate_real_roots()
}

/// Serde adapters writing rationals as `"p/q"` strings.
pub mod serde_rational {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::rational::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_some(&format_rational(r)),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            let s = Option::<String>::deserialize(d)?;
            s.map(|s| parse_rational(&s).map_err(serde::de::Error::custom)).transpose()
        }
    }

    pub mod vec {
        use serde::ser::SerializeSeq;

        use super::*;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&format_rational(r))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let v = Vec::<String>::deserialize(d)?;
            v.iter().map(|s| parse_rational(s).map_err(serde::de::Error::custom)).collect()
        }
    }
    pub mod vec_vec {
        use serde::ser::SerializeSeq;

        use super::*;

        pub fn serialize<S: Serializer>(v: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for row in v {
                let r: Vec<String> = row.iter().map(format_rational).collect();
                seq.serialize_element(&r)?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
            let v = Vec::<Vec<String>>::deserialize(d)?;
            v.iter()
                .map(|row| row.iter().map(|s| parse_rational(s).map_err(serde::de::Error::custom)).collect())
                .collect()
        }
    }
}
