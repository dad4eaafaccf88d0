//! Polar linear systems of homogeneous polynomials and the degree of the
//! induced rational map.

mod classify;
mod degree;

use num_traits::Zero;
use serde::Serialize;

pub use classify::{classify_reduced_curve, conjecture_probe, ClassificationResult, ConjectureRecord, CurveShape};
pub use degree::{
    base_multiplicity_total, is_homaloidal, topological_degree, DegreeReport, Trial, TrialOutcome,
    DEFAULT_MAX_RETRIES,
};

use crate::algebra::{gcd_multi, matrix, Monomial, Polynomial, Scalar, UniPoly};
use crate::error::{Error, Result};
use crate::rng;

/// The partials of `F`, their common factor and the mobile part.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolarSystem {
    #[serde(serialize_with = "crate::report::polynomials")]
    pub partials: Vec<Polynomial>,
    #[serde(serialize_with = "crate::report::polynomial")]
    pub fixed_part: Polynomial,
    #[serde(serialize_with = "crate::report::polynomials")]
    pub mobile: Vec<Polynomial>,
    pub source_degree: u32,
}

impl PolarSystem {
    pub fn nvars(&self) -> usize {
        self.partials.len()
    }

    /// Common degree of the mobile components.
    pub fn mobile_degree(&self) -> u32 {
        self.mobile.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    pub fn has_fixed_part(&self) -> bool {
        !self.fixed_part.is_constant()
    }
}

/// Builds the polar system of a homogeneous `F` in three or four variables.
///
/// In three variables the fixed part is an exact GCD. In four variables only
/// the common monomial factor is split off; the remainder is then checked
/// for a hidden common factor by restricting to random lines.
pub fn polar_system(f: &Polynomial) -> Result<PolarSystem> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let d = f.degree().unwrap();
    if d == 0 {
        return Err(Error::DegreePrecondition("constant polynomial".into()));
    }
    let n = f.nvars();
    let partials = f.gradient();
    let fixed_part = match n {
        3 if coprime_on_random_line(&partials) => Polynomial::one(3),
        3 => gcd_multi(&partials)?,
        4 => {
            let m = partials
                .iter()
                .filter(|p| !p.is_zero())
                .map(Polynomial::monomial_content)
                .reduce(|a, b| a.gcd(&b))
                .unwrap_or_else(|| Monomial::one(n));
            let fixed = Polynomial::monomial(m, Scalar::from_integer(1.into()));
            let reduced: Vec<Polynomial> = partials.iter().map(|p| exact(p, &fixed)).collect();
            if line_restriction_gcd_degree(&reduced, 5) > 0 {
                return Err(Error::UnsupportedVariableCount {
                    nvars: n,
                    reason: "non-monomial fixed part in four variables",
                });
            }
            fixed
        }
        _ => {
            return Err(Error::UnsupportedVariableCount {
                nvars: n,
                reason: "polar systems need three or four variables",
            })
        }
    };
    let mobile = partials.iter().map(|p| exact(p, &fixed_part)).collect();
    Ok(PolarSystem {
        partials,
        fixed_part,
        mobile,
        source_degree: d,
    })
}

fn exact(p: &Polynomial, q: &Polynomial) -> Polynomial {
    p.exact_div(q)
        .expect("nonzero fixed part")
        .expect("fixed part divides every partial")
}

/// GCD of the restrictions of `polys` to the affine line `p + t q`.
fn restriction_gcd(polys: &[Polynomial], p: &[i64], q: &[i64]) -> UniPoly {
    let n = polys[0].nvars();
    let images: Vec<Polynomial> = (0..n)
        .map(|i| &Polynomial::from_int(p[i], 1) + &Polynomial::var(0, 1).scale(&Scalar::from_integer(q[i].into())))
        .collect();
    polys
        .iter()
        .map(|f| {
            let u = f.substitute(&images);
            let coeffs: Vec<Scalar> = (0..=u.degree().unwrap_or(0))
                .map(|k| u.coefficient(&Monomial::new(vec![k])))
                .collect();
            UniPoly::new(coeffs)
        })
        .fold(UniPoly::zero(), |acc, u| acc.gcd(&u))
}

/// Smallest degree of the GCD of the restrictions of `polys` to `lines`
/// random lines. Positive means a common factor survived on every line.
fn line_restriction_gcd_degree(polys: &[Polynomial], lines: usize) -> usize {
    let n = polys[0].nvars();
    let mut r = rng::seeded(0x5EED_0001);
    let mut best = usize::MAX;
    for _ in 0..lines {
        let p = rng::int_vec(&mut r, n, 50);
        let q = rng::int_vec(&mut r, n, 50);
        best = best.min(restriction_gcd(polys, &p, &q).degree().unwrap_or(0));
    }
    best
}

/// Exact certificate that homogeneous `polys` share no factor: on the line
/// through `p` and `q`, the restrictions have constant GCD and not all vanish
/// at `q`. A common factor `G` would restrict to a binary form of degree
/// `deg G` dividing all of them. Returns `false` when inconclusive.
fn coprime_on_random_line(polys: &[Polynomial]) -> bool {
    let n = polys[0].nvars();
    let mut r = rng::seeded(0x5EED_0002);
    (0..2).any(|_| {
        let p = rng::int_vec(&mut r, n, 50);
        let q = rng::int_vec(&mut r, n, 50);
        let qs: Vec<Scalar> = q.iter().map(|&x| Scalar::from_integer(x.into())).collect();
        polys.iter().any(|f| !f.eval(&qs).is_zero()) && restriction_gcd(polys, &p, &q).degree() == Some(0)
    })
}

/// Degree of the polar map of a quadratic form: one if the symmetric
/// coefficient matrix is invertible, zero otherwise.
pub fn quadric_degree(q: &Polynomial) -> Result<u32> {
    if q.degree() != Some(2) || !q.is_homogeneous() {
        return Err(Error::DegreePrecondition(
            "expected a homogeneous quadratic form".into(),
        ));
    }
    let n = q.nvars();
    let mut a = vec![vec![Scalar::zero(); n]; n];
    for (m, c) in q.terms() {
        let idx: Vec<usize> = m
            .exponents()
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect();
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            a[i][i] += c;
        } else {
            let half = c / Scalar::from_integer(2.into());
            a[i][j] += &half;
            a[j][i] += half;
        }
    }
    Ok(u32::from(matrix::rank(&a) == n))
}

/// An ordinary `i`-fold point: `i` smooth branches with distinct tangents.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrdinarySingularity {
    #[serde(serialize_with = "crate::report::scalars")]
    pub point: Vec<Scalar>,
    pub branch_count: u32,
}

impl OrdinarySingularity {
    pub fn delta(&self) -> u64 {
        let i = u64::from(self.branch_count);
        i * (i - 1) / 2
    }

    /// `2 delta - r + 1`.
    pub fn milnor(&self) -> u64 {
        2 * self.delta() - u64::from(self.branch_count) + 1
    }
}

/// Milnor number `(i - 1)^2` of an ordinary `i`-fold point.
pub fn ordinary_milnor(branches: u32) -> Result<u64> {
    if branches < 2 {
        return Err(Error::Precondition(format!(
            "an ordinary singular point has at least two branches, got {branches}"
        )));
    }
    let s = OrdinarySingularity {
        point: Vec::new(),
        branch_count: branches,
    };
    Ok(s.milnor())
}

/// One irreducible component of a plane curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Component {
    pub degree: u32,
    pub genus: u32,
}

/// Checks the arithmetic genus count
/// `(d-1)(d-2)/2 = sum g_i + sum delta_x - h + 1`.
pub fn genus_check(degree: u32, components: &[Component], deltas: &[u64]) -> Result<bool> {
    let total: u32 = components.iter().map(|c| c.degree).sum();
    if total != degree {
        return Err(Error::Precondition(format!(
            "component degrees sum to {total}, curve has degree {degree}"
        )));
    }
    let d = i64::from(degree);
    let lhs = (d - 1) * (d - 2) / 2;
    let h = components.len() as i64;
    let genera: i64 = components.iter().map(|c| i64::from(c.genus)).sum();
    let delta: i64 = deltas.iter().map(|&x| x as i64).sum();
    Ok(lhs == genera + delta - h + 1)
}
