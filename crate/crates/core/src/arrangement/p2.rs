use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::HyperplaneSet;
use crate::algebra::{matrix, Scalar};
use crate::error::{Error, Result};

/// A point where at least two lines meet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplePoint {
    #[serde(serialize_with = "crate::report::scalars")]
    pub coords: Vec<Scalar>,
    /// Indices of the lines through the point; its multiplicity is the length.
    pub lines: Vec<usize>,
}

impl MultiplePoint {
    pub fn multiplicity(&self) -> u32 {
        self.lines.len() as u32
    }
}

/// Incidence data of a line arrangement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceP2 {
    /// Number of lines.
    pub s: usize,
    pub points: Vec<MultiplePoint>,
    /// `a[i]` = number of points on exactly `i` lines.
    pub a: BTreeMap<u32, u64>,
    /// `k[i]` = number of multiple points on line `i`.
    pub k: Vec<u32>,
    /// Total number of multiple points.
    pub t: usize,
}

fn cross(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    vec![
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

/// Computes all multiple points of a line arrangement exactly.
pub fn incidence_p2(lines: &HyperplaneSet) -> Result<IncidenceP2> {
    if lines.dim() != 2 {
        return Err(Error::InvalidHyperplane("expected lines in the plane".into()));
    }
    let s = lines.len();
    if s < 2 {
        return Err(Error::TooFewHyperplanes { required: 2, got: s });
    }
    let c = lines.covectors();
    let mut by_point: BTreeMap<Vec<Scalar>, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..s {
        for j in i + 1..s {
            let p = matrix::normalize_projective(&cross(&c[i], &c[j]));
            let set = by_point.entry(p).or_default();
            set.insert(i);
            set.insert(j);
        }
    }
    let points: Vec<MultiplePoint> = by_point
        .into_iter()
        .map(|(coords, set)| MultiplePoint {
            coords,
            lines: set.into_iter().collect(),
        })
        .collect();
    let mut a = BTreeMap::new();
    let mut k = vec![0u32; s];
    for p in &points {
        *a.entry(p.multiplicity()).or_insert(0) += 1;
        for &l in &p.lines {
            k[l] += 1;
        }
    }
    Ok(IncidenceP2 {
        s,
        t: points.len(),
        points,
        a,
        k,
    })
}

/// Pair count `s(s-1) = sum_i a_i i(i-1)`.
pub fn verify_pair_count(inc: &IncidenceP2) -> bool {
    let s = inc.s as u64;
    let rhs: u64 = inc
        .a
        .iter()
        .map(|(&i, &n)| n * u64::from(i) * u64::from(i.saturating_sub(1)))
        .sum();
    s * s.saturating_sub(1) == rhs
}

/// Polar degree `1 + sum (k_i - 1) - t` of a line arrangement; zero for a pencil.
pub fn degree_p2_lines(inc: &IncidenceP2) -> i64 {
    if inc.t <= 1 {
        return 0;
    }
    let sum: i64 = inc.k.iter().map(|&k| i64::from(k) - 1).sum();
    1 + sum - inc.t as i64
}

/// Checks `sum (k_i - 1) >= t`, with equality exactly when `t = s = 3`.
pub fn verify_multiple_point_bound(inc: &IncidenceP2) -> Result<bool> {
    if inc.t <= 1 {
        return Err(Error::Precondition(format!(
            "needs more than one multiple point, got {}",
            inc.t
        )));
    }
    let sum: i64 = inc.k.iter().map(|&k| i64::from(k) - 1).sum();
    let t = inc.t as i64;
    let equality = sum == t;
    Ok(sum >= t && equality == (inc.t == 3 && inc.s == 3))
}
