//! Serde helpers that write exact values as canonical strings.

use serde::Serializer;

use crate::algebra::{Polynomial, Scalar};

pub fn scalar_string(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn scalar<S: Serializer>(c: &Scalar, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&scalar_string(c))
}

pub fn scalars<S: Serializer>(v: &[Scalar], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(scalar_string))
}

pub fn scalar_rows<S: Serializer>(v: &[Vec<Scalar>], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.iter().map(scalar_string).collect::<Vec<_>>()))
}

pub fn polynomial<S: Serializer>(p: &Polynomial, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

pub fn polynomials<S: Serializer>(v: &[Polynomial], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}
