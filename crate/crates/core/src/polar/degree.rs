//! Topological degree of plane polar maps by exact resultant elimination.
//!
//! For a net `(P0 : P1 : P2)` of plane curves of degree `e` without fixed
//! part, the fiber over a target `(a : b : c)` together with the base locus
//! is cut out by `c P0 - a P2 = c P1 - b P2 = 0`. After a random shear,
//! eliminating `x2` in the chart `x0 = 1` projects the solutions onto
//! distinct `x1` values. Two fibers share only the base locus, so the
//! distinct roots of the first resultant that are not roots of the second
//! count the generic fiber.

use num_traits::Zero;
use serde::Serialize;

use super::PolarSystem;
use crate::algebra::{int, jacobian_det, matrix, resultant_elim, Polynomial, Scalar, UniPoly};
use crate::error::{Error, Result};
use crate::rng::{self, SeededRng};

pub const DEFAULT_MAX_RETRIES: usize = 8;
const INITIAL_BOUND: i64 = 10;

/// What one randomized trial concluded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum TrialOutcome {
    Degree(u64),
    /// Both fiber resultants vanished identically.
    Degenerate,
    /// Genericity failure; the trial carries no vote.
    Failed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trial {
    pub seed: u64,
    pub bound: i64,
    pub shear: Vec<Vec<i64>>,
    pub targets: Vec<[i64; 3]>,
    /// Degrees of the two raw fiber resultants.
    pub resultant_degrees: Vec<Option<usize>>,
    /// Degrees of their squarefree parts.
    pub squarefree_degrees: Vec<usize>,
    /// Number of distinct base points seen (degree of the shared factor).
    pub base_points: Option<usize>,
    pub outcome: TrialOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub degree: u64,
    pub degenerate_image: bool,
    /// Distinct base points, when a non-degenerate degree was certified.
    pub base_points: Option<usize>,
    /// Votes of the completed trials, in trial order.
    pub votes: Vec<TrialOutcome>,
    pub trials: Vec<Trial>,
}

/// Degree of the plane polar map defined by the mobile part of `system`.
///
/// Trials are repeated with fresh randomness (coefficient bound doubling
/// after the first pair) until two completed trials agree.
pub fn topological_degree(system: &PolarSystem, seed: u64, max_retries: usize) -> Result<DegreeReport> {
    if system.nvars() != 3 {
        return Err(Error::UnsupportedVariableCount {
            nvars: system.nvars(),
            reason: "degree by elimination is implemented for plane maps only",
        });
    }
    let e = system.mobile_degree();
    // A map whose Jacobian vanishes identically is not dominant.
    if e == 0 || jacobian_det(&system.mobile).is_zero() {
        return Ok(DegreeReport {
            degree: 0,
            degenerate_image: true,
            base_points: None,
            votes: Vec::new(),
            trials: Vec::new(),
        });
    }
    let mut trials: Vec<Trial> = Vec::new();
    let attempts = max_retries.max(2);
    for k in 0..attempts {
        let bound = INITIAL_BOUND << k.saturating_sub(1).min(20);
        let trial_seed = rng::derive_seed(seed, k as u64);
        let trial = run_trial(&system.mobile, e, trial_seed, bound)?;
        let agreeing = match &trial.outcome {
            TrialOutcome::Failed(_) => None,
            o => trials.iter().find(|t| &t.outcome == o).cloned(),
        };
        trials.push(trial);
        if let Some(prev) = agreeing {
            let votes = trials
                .iter()
                .filter(|t| !matches!(t.outcome, TrialOutcome::Failed(_)))
                .map(|t| t.outcome.clone())
                .collect();
            let (degree, degenerate) = match prev.outcome {
                TrialOutcome::Degree(d) => (d, false),
                _ => (0, true),
            };
            return Ok(DegreeReport {
                degree,
                degenerate_image: degenerate,
                base_points: (!degenerate).then_some(prev.base_points).flatten(),
                votes,
                trials,
            });
        }
    }
    Err(Error::RetriesExhausted { attempts })
}

fn random_shear(r: &mut SeededRng, bound: i64) -> Vec<Vec<i64>> {
    loop {
        let m: Vec<Vec<i64>> = (0..3).map(|_| rng::int_vec(r, 3, bound)).collect();
        let q: Vec<Vec<Scalar>> = m.iter().map(|row| row.iter().map(|&x| int(x)).collect()).collect();
        if !matrix::det_scalar(&q).is_zero() {
            return m;
        }
    }
}

fn random_targets(r: &mut SeededRng, bound: i64) -> [[i64; 3]; 2] {
    loop {
        let t1 = [rng::int_in(r, bound), rng::int_in(r, bound), rng::int_in(r, bound)];
        let t2 = [rng::int_in(r, bound), rng::int_in(r, bound), rng::int_in(r, bound)];
        if t1[2] == 0 || t2[2] == 0 {
            continue;
        }
        // proportional iff the cross product vanishes
        let cross = [
            t1[1] * t2[2] - t1[2] * t2[1],
            t1[2] * t2[0] - t1[0] * t2[2],
            t1[0] * t2[1] - t1[1] * t2[0],
        ];
        if cross != [0, 0, 0] {
            return [t1, t2];
        }
    }
}

fn run_trial(mobile: &[Polynomial], e: u32, seed: u64, bound: i64) -> Result<Trial> {
    let mut r = rng::seeded(seed);
    let shear = random_shear(&mut r, bound);
    let targets = random_targets(&mut r, bound);
    let mut trial = Trial {
        seed,
        bound,
        shear: shear.clone(),
        targets: targets.to_vec(),
        resultant_degrees: Vec::new(),
        squarefree_degrees: Vec::new(),
        base_points: None,
        outcome: TrialOutcome::Failed(String::new()),
    };
    let m: Vec<Vec<Scalar>> = shear.iter().map(|row| row.iter().map(|&x| int(x)).collect()).collect();
    let sheared: Vec<Polynomial> = mobile.iter().map(|p| p.linear_change(&m)).collect();
    let corner = [int(0), int(0), int(1)];
    let bezout = (e as usize) * (e as usize);

    let mut squarefree = Vec::with_capacity(2);
    let mut zero_count = 0;
    for t in &targets {
        let [a, b, c] = t.map(int);
        let g1 = &sheared[0].scale(&c) - &sheared[2].scale(&a);
        let g2 = &sheared[1].scale(&c) - &sheared[2].scale(&b);
        if g1.eval(&corner).is_zero() || g2.eval(&corner).is_zero() {
            trial.outcome = TrialOutcome::Failed("x2 leading coefficient vanished".into());
            return Ok(trial);
        }
        let one = int(1);
        let res = resultant_elim(&g1.specialize(0, &one), &g2.specialize(0, &one), 1)?;
        trial.resultant_degrees.push(res.degree());
        if res.is_zero() {
            zero_count += 1;
            continue;
        }
        if res.degree() != Some(bezout) {
            trial.outcome = TrialOutcome::Failed(format!(
                "resultant degree {:?} below the Bezout bound {bezout}: solutions at infinity",
                res.degree()
            ));
            return Ok(trial);
        }
        squarefree.push(res.squarefree_part()?);
    }
    if zero_count == 2 {
        trial.outcome = TrialOutcome::Degenerate;
        return Ok(trial);
    }
    if zero_count == 1 {
        trial.outcome = TrialOutcome::Failed("one fiber resultant vanished".into());
        return Ok(trial);
    }
    let d1 = squarefree[0].degree().unwrap_or(0);
    trial.squarefree_degrees = squarefree.iter().map(|u| u.degree().unwrap_or(0)).collect();
    let shared: UniPoly = squarefree[0].gcd(&squarefree[1]);
    let base = shared.degree().unwrap_or(0);
    trial.base_points = Some(base);
    trial.outcome = TrialOutcome::Degree((d1 - base) as u64);
    Ok(trial)
}

/// Whether the polar map of `F` is birational. `F` must be a plane curve
/// whose partials have no common factor.
pub fn is_homaloidal(f: &Polynomial, seed: u64) -> Result<bool> {
    let s = super::polar_system(f)?;
    if s.has_fixed_part() {
        return Err(Error::NonconstantFixedPart(s.fixed_part.to_string()));
    }
    let r = topological_degree(&s, seed, DEFAULT_MAX_RETRIES)?;
    Ok(r.degree == 1 && !r.degenerate_image)
}

/// Total base-locus multiplicity `(d-1)^2 - d_t` of a plane polar system.
pub fn base_multiplicity_total(system: &PolarSystem, seed: u64) -> Result<u64> {
    if system.has_fixed_part() {
        return Err(Error::NonconstantFixedPart(system.fixed_part.to_string()));
    }
    let r = topological_degree(system, seed, DEFAULT_MAX_RETRIES)?;
    let e = u64::from(system.source_degree - 1);
    Ok(e * e - r.degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly_in;
    use crate::polar::polar_system;

    fn degree_of(s: &str) -> DegreeReport {
        let f = parse_poly_in(s, 3).unwrap().poly;
        topological_degree(&polar_system(&f).unwrap(), 0, DEFAULT_MAX_RETRIES).unwrap()
    }

    #[test]
    fn homaloidal_examples() {
        assert_eq!(degree_of("x0^2 + x1^2 + x2^2").degree, 1);
        assert_eq!(degree_of("x0*(x0*x2 + x1^2)").degree, 1);
        assert_eq!(degree_of("x0*x1*x2").degree, 1);
    }

    #[test]
    fn singular_cubics() {
        // cusp: mu = 2, (3-1)^2 - 2 = 2
        assert_eq!(degree_of("x1^2*x2 - x0^3").degree, 2);
        // node: mu = 1
        assert_eq!(degree_of("x1^2*x2 - x0^2*(x0 + x2)").degree, 3);
        assert_eq!(degree_of("x0^3 + x1^3 + x2^3").degree, 4);
    }

    #[test]
    fn concurrent_lines_are_degenerate() {
        let r = degree_of("x0*x1*(x0 + x1)");
        assert!(r.degenerate_image);
        assert_eq!(r.degree, 0);
    }

    #[test]
    fn report_records_agreeing_trials() {
        let r = degree_of("x0^3 + x1^3 + x2^3");
        assert!(r.votes.len() >= 2);
        assert!(r.votes.iter().all(|v| v == &TrialOutcome::Degree(4)));
        assert_eq!(r.base_points, Some(0));
    }

    #[test]
    fn base_multiplicity() {
        let f = parse_poly_in("x1^2*x2 - x0^2*(x0 + x2)", 3).unwrap().poly;
        let s = polar_system(&f).unwrap();
        assert_eq!(base_multiplicity_total(&s, 3), Ok(1));
        let f = parse_poly_in("x0^3 + x1^3 + x2^3", 3).unwrap().poly;
        assert_eq!(base_multiplicity_total(&polar_system(&f).unwrap(), 3), Ok(0));
        let f = parse_poly_in("x0*x1*x2", 3).unwrap().poly;
        // homaloidal of degree d: d^2 - 2d
        assert_eq!(base_multiplicity_total(&polar_system(&f).unwrap(), 3), Ok(3));
    }

    #[test]
    fn is_homaloidal_examples() {
        let p = |s| parse_poly_in(s, 3).unwrap().poly;
        assert_eq!(is_homaloidal(&p("x0*x1*x2"), 0), Ok(true));
        assert_eq!(is_homaloidal(&p("x0^3 + x1^3 + x2^3"), 0), Ok(false));
        assert_eq!(is_homaloidal(&p("x0*x1*(x0 + x1)"), 0), Ok(false));
    }

    #[test]
    fn fixed_part_handling() {
        let f = parse_poly_in("x0^2*x1*x2", 3).unwrap().poly;
        assert!(matches!(
            is_homaloidal(&f, 0),
            Err(Error::NonconstantFixedPart(_))
        ));
        // the mobile part (2 x1 x2, x0 x2, x0 x1) is the standard quadratic involution
        let s = polar_system(&f).unwrap();
        assert_eq!(topological_degree(&s, 0, 4).unwrap().degree, 1);
    }
}
