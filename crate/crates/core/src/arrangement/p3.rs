use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::{dot, HyperplaneSet};
use crate::algebra::{matrix, Scalar};
use crate::error::{Error, Result};

/// A line contained in at least two planes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineP3 {
    /// Normalized Plücker coordinates of the span of two defining covectors.
    #[serde(serialize_with = "crate::report::scalars")]
    pub plucker: Vec<Scalar>,
    /// Planes containing the line; `k_l` is the length.
    pub planes: Vec<usize>,
    /// Indices into [`IncidenceP3::points`]; `a_l` is the length.
    pub points: Vec<usize>,
}

impl LineP3 {
    pub fn k(&self) -> u32 {
        self.planes.len() as u32
    }
    pub fn a(&self) -> u32 {
        self.points.len() as u32
    }
}

/// A point contained in at least three planes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointP3 {
    #[serde(serialize_with = "crate::report::scalars")]
    pub coords: Vec<Scalar>,
    pub planes: Vec<usize>,
}

impl PointP3 {
    pub fn k(&self) -> u32 {
        self.planes.len() as u32
    }
}

/// Incidence data of a plane arrangement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceP3 {
    pub n: usize,
    pub lines: Vec<LineP3>,
    pub points: Vec<PointP3>,
    /// `t_s` = number of points on exactly `s` planes.
    pub t_s: BTreeMap<u32, u64>,
    /// `t_q(1)` = number of lines on exactly `q` planes.
    pub t_q1: BTreeMap<u32, u64>,
    /// `t_sq` = sum over lines on `q` planes of their points on `s` planes.
    #[serde(serialize_with = "pair_map")]
    pub t_sq: BTreeMap<(u32, u32), u64>,
}

fn pair_map<S: Serializer>(m: &BTreeMap<(u32, u32), u64>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_map(m.iter().map(|((a, b), v)| (format!("{a},{b}"), v)))
}

fn plucker(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(6);
    for a in 0..4 {
        for b in a + 1..4 {
            out.push(&u[a] * &v[b] - &u[b] * &v[a]);
        }
    }
    matrix::normalize_projective(&out)
}

/// Computes the multiple lines and points of a plane arrangement exactly.
pub fn incidence_p3(planes: &HyperplaneSet) -> Result<IncidenceP3> {
    if planes.dim() != 3 {
        return Err(Error::InvalidHyperplane("expected planes in 3-space".into()));
    }
    let n = planes.len();
    if n < 3 {
        return Err(Error::TooFewHyperplanes { required: 3, got: n });
    }
    let c = planes.covectors();
    let on = |h: &[Scalar], p: &[Scalar]| dot(h, p).is_zero();

    let mut line_keys: BTreeMap<Vec<Scalar>, (usize, usize)> = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            line_keys.entry(plucker(&c[i], &c[j])).or_insert((i, j));
        }
    }

    let mut point_keys: BTreeSet<Vec<Scalar>> = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let rows = [c[i].clone(), c[j].clone(), c[k].clone()];
                let ns = matrix::nullspace(&rows, 4);
                if ns.len() == 1 {
                    point_keys.insert(matrix::normalize_projective(&ns[0]));
                }
            }
        }
    }
    let points: Vec<PointP3> = point_keys
        .into_iter()
        .map(|coords| PointP3 {
            planes: (0..n).filter(|&h| on(&c[h], &coords)).collect(),
            coords,
        })
        .collect();

    let lines: Vec<LineP3> = line_keys
        .into_iter()
        .map(|(key, (i, j))| {
            let planes = (0..n)
                .filter(|&h| h == i || h == j || matrix::rank(&[c[i].clone(), c[j].clone(), c[h].clone()]) == 2)
                .collect();
            let pts = points
                .iter()
                .enumerate()
                .filter(|(_, p)| on(&c[i], &p.coords) && on(&c[j], &p.coords))
                .map(|(idx, _)| idx)
                .collect();
            LineP3 {
                plucker: key,
                planes,
                points: pts,
            }
        })
        .collect();

    let mut t_s = BTreeMap::new();
    for p in &points {
        *t_s.entry(p.k()).or_insert(0) += 1;
    }
    let mut t_q1 = BTreeMap::new();
    let mut t_sq = BTreeMap::new();
    for l in &lines {
        *t_q1.entry(l.k()).or_insert(0) += 1;
        for &p in &l.points {
            *t_sq.entry((points[p].k(), l.k())).or_insert(0) += 1;
        }
    }
    Ok(IncidenceP3 {
        n,
        lines,
        points,
        t_s,
        t_q1,
        t_sq,
    })
}

/// Polar degree `N - 1 - sum_p (k_p - 1) + sum_l (a_l - 1)(k_l - 1)`.
pub fn degree_p3(inc: &IncidenceP3) -> i64 {
    let n = inc.n as i64;
    let points: i64 = inc.points.iter().map(|p| i64::from(p.k()) - 1).sum();
    let lines: i64 = inc
        .lines
        .iter()
        .map(|l| (i64::from(l.a()) - 1) * (i64::from(l.k()) - 1))
        .sum();
    n - 1 - points + lines
}

/// The self-intersection `((N-1)H - D)^3` on the blow-up of the multiple
/// points and then the multiple lines, expanded term by term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlowupExpansion {
    /// `(N-1)^3`
    pub hyperplane_cube: i64,
    /// `-3(N-1) sum_l (k_l-1)^2`
    pub line_square: i64,
    /// `-sum_l (k_l-1)^3 (2a_l-2)`
    pub line_cube: i64,
    /// `-sum_p (k_p-1)^3`
    pub point_cube: i64,
    /// `+3 sum_{p in l} (k_l-1)^2 (k_p-1)`
    pub flag: i64,
    pub total: i64,
}

pub fn blowup_expansion(inc: &IncidenceP3) -> BlowupExpansion {
    let n1 = inc.n as i64 - 1;
    let mut line_square = 0;
    let mut line_cube = 0;
    let mut flag = 0;
    for l in &inc.lines {
        let kl = i64::from(l.k()) - 1;
        line_square += kl * kl;
        line_cube += kl.pow(3) * (2 * i64::from(l.a()) - 2);
        for &p in &l.points {
            flag += kl * kl * (i64::from(inc.points[p].k()) - 1);
        }
    }
    let point_cube: i64 = inc.points.iter().map(|p| (i64::from(p.k()) - 1).pow(3)).sum();
    let e = BlowupExpansion {
        hyperplane_cube: n1.pow(3),
        line_square: -3 * n1 * line_square,
        line_cube: -line_cube,
        point_cube: -point_cube,
        flag: 3 * flag,
        total: 0,
    };
    BlowupExpansion {
        total: e.hyperplane_cube + e.line_square + e.line_cube + e.point_cube + e.flag,
        ..e
    }
}

/// Per-line count `sum_{p in l} (k_p - 1) = (a_l - 1) k_l + N - a_l`, on every line.
pub fn verify_line_identity(inc: &IncidenceP3) -> bool {
    let n = inc.n as i64;
    inc.lines.iter().all(|l| {
        let lhs: i64 = l.points.iter().map(|&p| i64::from(inc.points[p].k()) - 1).sum();
        let (a, k) = (i64::from(l.a()), i64::from(l.k()));
        lhs == (a - 1) * k + n - a
    })
}

fn binom3(x: u32) -> i64 {
    let x = i64::from(x);
    x * (x - 1) * (x - 2) / 6
}

/// Triple count `C(N,3) = sum_s C(s,3) t_s - sum_q C(q,3) (sum_s t_sq - t_q(1))`.
pub fn verify_triple_count(inc: &IncidenceP3) -> bool {
    let lhs = binom3(inc.n as u32);
    let points: i64 = inc.t_s.iter().map(|(&s, &t)| binom3(s) * t as i64).sum();
    let lines: i64 = inc
        .t_q1
        .iter()
        .map(|(&q, &t1)| {
            let on_lines: u64 = inc
                .t_sq
                .iter()
                .filter(|((_, qq), _)| *qq == q)
                .map(|(_, &v)| v)
                .sum();
            binom3(q) * (on_lines as i64 - t1 as i64)
        })
        .sum();
    lhs == points - lines
}

/// Whether all planes share a common point (coefficient matrix rank at most 3).
pub fn all_through_point(planes: &HyperplaneSet) -> bool {
    matrix::rank(planes.covectors()) <= 3
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MonotonicityRecord {
    pub d_before: i64,
    pub d_after: i64,
    pub holds: bool,
}

/// Compares the degree before and after adding `extra`. Requires a nonzero
/// starting degree.
pub fn monotonicity_check(planes: &HyperplaneSet, extra: Vec<Scalar>) -> Result<MonotonicityRecord> {
    let after = planes.with(extra)?;
    let d_before = degree_p3(&incidence_p3(planes)?);
    if d_before == 0 {
        return Err(Error::Precondition(
            "the starting arrangement has degree zero".into(),
        ));
    }
    let d_after = degree_p3(&incidence_p3(&after)?);
    Ok(MonotonicityRecord {
        d_before,
        d_after,
        holds: d_after > d_before,
    })
}
