//! Arrangement and factor files.

use std::path::Path;

use cremona_core::algebra::Scalar;
use cremona_core::{parse_poly_in, HyperplaneSet, Polynomial};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Coefficient {
    Int(i64),
    Text(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrangementFile {
    dim: usize,
    hyperplanes: Vec<Vec<Coefficient>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorEntry {
    poly: String,
    multiplicity: u32,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

/// Parses an integer or `"p/q"` coefficient.
pub fn parse_rational(text: &str) -> Result<Scalar, CliError> {
    let bad = || CliError::Usage(format!("invalid coefficient {text:?}"));
    if !text.chars().all(|c| c.is_ascii_digit() || "-/ ".contains(c)) {
        return Err(bad());
    }
    let p = parse_poly_in(text, 1).map_err(|_| bad())?.poly;
    if !p.is_constant() {
        return Err(bad());
    }
    Ok(p.constant_term())
}

pub fn load_arrangement(path: &Path) -> Result<HyperplaneSet, CliError> {
    let text = read(path)?;
    let file: ArrangementFile =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("malformed arrangement file: {e}")))?;
    let rows = file
        .hyperplanes
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| match c {
                    Coefficient::Int(v) => Ok(Scalar::from_integer((*v).into())),
                    Coefficient::Text(s) => parse_rational(s),
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    HyperplaneSet::new(file.dim, rows).map_err(|e| CliError::Usage(format!("invalid arrangement: {e}")))
}

pub fn load_factors(path: &Path) -> Result<Vec<(Polynomial, u32)>, CliError> {
    let text = read(path)?;
    let entries: Vec<FactorEntry> =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("malformed factors file: {e}")))?;
    if entries.is_empty() {
        return Err(CliError::Usage("factors file lists no factors".into()));
    }
    entries
        .into_iter()
        .map(|e| {
            if e.multiplicity == 0 {
                return Err(CliError::Usage(format!("factor {:?} has multiplicity 0", e.poly)));
            }
            let p = parse_poly_in(&e.poly, 3).map_err(|err| CliError::Usage(format!("{:?}: {err}", e.poly)))?;
            Ok((p.poly, e.multiplicity))
        })
        .collect()
}
