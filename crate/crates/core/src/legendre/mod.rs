//! The multiplicative Legendre transform: `d ln F` as a birational map,
//! exact sample checks of its defining identities, and a catalog of
//! homaloidal polynomials with known transforms.

mod catalog;
mod checks;

use num_traits::Zero;
use serde::Serialize;

pub use catalog::{catalog, catalog_entry, det3, pfaffian, quadric, skew_index, CatalogEntry};
pub use checks::{adjugate_involution_check, degree_divisibility_check, hessian_divisibility_check};

use crate::algebra::{int, Polynomial, Scalar};
use crate::error::{Error, Result};
use crate::rng::{int_vec, seeded};

/// Value of a rational map at a point; empty when a denominator vanished.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalMapValue {
    #[serde(serialize_with = "crate::report::scalars")]
    pub components: Vec<Scalar>,
    pub defined: bool,
}

impl RationalMapValue {
    fn undefined() -> Self {
        RationalMapValue {
            components: Vec::new(),
            defined: false,
        }
    }
}

/// `(∂F/∂x_i)(v) / F(v)`.
pub fn dlog(f: &Polynomial, v: &[Scalar]) -> RationalMapValue {
    let value = f.eval(v);
    if value.is_zero() {
        return RationalMapValue::undefined();
    }
    let inv = value.recip();
    RationalMapValue {
        components: f.gradient().iter().map(|g| g.eval(v) * &inv).collect(),
        defined: true,
    }
}

/// `d ln (num / den)` at `w`.
pub fn dlog_rational(num: &Polynomial, den: &Polynomial, w: &[Scalar]) -> RationalMapValue {
    let a = dlog(num, w);
    let b = dlog(den, w);
    if !a.defined || !b.defined {
        return RationalMapValue::undefined();
    }
    RationalMapValue {
        components: a.components.iter().zip(&b.components).map(|(x, y)| x - y).collect(),
        defined: true,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LegendreReport {
    pub entry: String,
    pub samples_tested: usize,
    /// Samples where `F(v) = 0` or the denominator of `F*` vanished.
    pub samples_skipped: usize,
    /// `c F*(d ln F(v)) = 1/F(v)` with one constant `c`.
    pub reciprocal_holds: bool,
    /// `d ln F*(d ln F(v)) = v`.
    pub round_trip_holds: bool,
    /// `v . d ln F(v) = deg F`.
    pub euler_holds: bool,
    /// `dF*(dF(v)) F(v) = c' F*(dF(v)) v` with one constant `c'`; absent for
    /// a rational transform.
    pub gradient_composition_holds: Option<bool>,
    #[serde(serialize_with = "crate::report::scalar")]
    pub calibrated_scale: Scalar,
    #[serde(serialize_with = "optional_scalar")]
    pub composition_scale: Option<Scalar>,
}

fn optional_scalar<S: serde::Serializer>(c: &Option<Scalar>, s: S) -> Result<S::Ok, S::Error> {
    match c {
        Some(c) => crate::report::scalar(c, s),
        None => s.serialize_none(),
    }
}

/// Sample points with integer coordinates in `[-9, 9]`, at most ten attempts
/// per requested sample. Each call to the closure returns `false` on a pole.
fn for_samples(
    nvars: usize,
    samples: usize,
    seed: u64,
    mut visit: impl FnMut(&[Scalar]) -> bool,
) -> Result<(usize, usize)> {
    let mut rng = seeded(seed);
    let (mut tested, mut skipped) = (0, 0);
    let budget = 10 * samples.max(1);
    for _ in 0..budget {
        if tested == samples {
            break;
        }
        let v: Vec<Scalar> = int_vec(&mut rng, nvars, 9).into_iter().map(int).collect();
        if visit(&v) {
            tested += 1;
        } else {
            skipped += 1;
        }
    }
    if tested == 0 {
        return Err(Error::AllSamplesPoles { attempts: budget });
    }
    Ok((tested, skipped))
}

fn scaled_equal(lhs: &[Scalar], rhs: &[Scalar], c: &mut Option<Scalar>) -> bool {
    if c.is_none() {
        match rhs.iter().position(|x| !x.is_zero()) {
            Some(i) => *c = Some(&lhs[i] / &rhs[i]),
            None => return lhs.iter().all(Zero::is_zero),
        }
    }
    let c = c.as_ref().expect("calibrated");
    lhs.iter().zip(rhs).all(|(l, r)| *l == c * r)
}

/// Checks the transform identities of `entry` at random rational samples.
/// The scale in the reciprocal identity is taken from `scale_hint` or solved
/// from the first valid sample; every later sample must match it exactly.
pub fn verify_entry(entry: &CatalogEntry, samples: usize, seed: u64) -> Result<LegendreReport> {
    let f = &entry.f;
    let (num, den) = (&entry.fstar_numerator, &entry.fstar_denominator);
    let polynomial = entry.has_polynomial_transform();
    let grad_f = f.gradient();
    let grad_num = num.gradient();
    let degree = int(i64::from(f.degree().unwrap_or(0)));

    let mut scale = entry.scale_hint.clone();
    let mut composition_scale: Option<Scalar> = None;
    let (mut reciprocal, mut round_trip, mut euler, mut composition) = (true, true, true, true);

    let (tested, skipped) = for_samples(f.nvars(), samples, seed, |v| {
        let fv = f.eval(v);
        if fv.is_zero() {
            return false;
        }
        let w = dlog(f, v).components;
        let den_w = den.eval(&w);
        if den_w.is_zero() {
            return false;
        }
        let fstar_w = num.eval(&w) / den_w;

        let target = fv.recip();
        match (&scale, fstar_w.is_zero()) {
            (_, true) => reciprocal = false,
            (None, false) => scale = Some(&target / &fstar_w),
            (Some(c), false) => reciprocal &= c * &fstar_w == target,
        }

        let back = dlog_rational(num, den, &w);
        round_trip &= back.defined && back.components == v;

        let pairing: Scalar = v.iter().zip(&w).map(|(a, b)| a * b).sum();
        euler &= pairing == degree;

        if polynomial {
            let df: Vec<Scalar> = grad_f.iter().map(|g| g.eval(v)).collect();
            let lhs: Vec<Scalar> = grad_num.iter().map(|g| g.eval(&df) * &fv).collect();
            let at = num.eval(&df);
            let rhs: Vec<Scalar> = v.iter().map(|x| x * &at).collect();
            composition &= scaled_equal(&lhs, &rhs, &mut composition_scale);
        }
        true
    })?;
    let calibrated_scale = scale.unwrap_or_else(Scalar::zero);
    Ok(LegendreReport {
        entry: entry.name.clone(),
        samples_tested: tested,
        samples_skipped: skipped,
        reciprocal_holds: reciprocal,
        round_trip_holds: round_trip,
        euler_holds: euler,
        gradient_composition_holds: polynomial.then_some(composition),
        calibrated_scale,
        composition_scale: composition_scale.filter(|_| polynomial),
    })
}

/// The composition law for `dF` and `dF*` alone; requires a polynomial `F*`.
pub fn gradient_composition_check(entry: &CatalogEntry, samples: usize, seed: u64) -> Result<bool> {
    if !entry.has_polynomial_transform() {
        return Err(Error::Precondition(format!(
            "{} has a rational transform",
            entry.name
        )));
    }
    let report = verify_entry(entry, samples, seed)?;
    Ok(report.gradient_composition_holds == Some(true))
}

/// `dlog(F, λv) = λ^-1 dlog(F, v)`.
pub fn dlog_homogeneity(f: &Polynomial, v: &[Scalar], lambda: &Scalar) -> bool {
    let scaled: Vec<Scalar> = v.iter().map(|x| x * lambda).collect();
    let a = dlog(f, &scaled);
    let b = dlog(f, v);
    if a.defined != b.defined {
        return false;
    }
    let inv = if lambda.is_zero() { return false } else { lambda.recip() };
    a.components
        .iter()
        .zip(&b.components)
        .all(|(x, y)| *x == y * &inv)
}
