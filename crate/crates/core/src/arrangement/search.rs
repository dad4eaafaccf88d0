//! Randomized search for plane arrangements whose polar map is birational.

use serde::{Deserialize, Serialize};

use super::random;
use super::{degree_p3, incidence_p3, HyperplaneSet, IncidenceP3};
use crate::algebra::matrix;
use crate::error::{Error, Result};
use crate::rng::{derive_seed, seeded};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Generic,
    Bundle,
    NearBundle,
    PencilThroughLine,
    Mixed,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Generic,
        Family::Bundle,
        Family::NearBundle,
        Family::PencilThroughLine,
        Family::Mixed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Generic => "generic",
            Family::Bundle => "bundle",
            Family::NearBundle => "near-bundle",
            Family::PencilThroughLine => "pencil-through-line",
            Family::Mixed => "mixed",
        }
    }

    /// Draws one arrangement of `n` planes.
    pub fn sample(self, n: usize, seed: u64) -> HyperplaneSet {
        let mut rng = seeded(seed);
        match self {
            Family::Generic => random::random_planes(&mut rng, n, 6),
            Family::Bundle => random::bundle(&mut rng, n, 3),
            Family::NearBundle => random::near_bundle(&mut rng, n, 3),
            Family::PencilThroughLine => {
                let pencil = 2 + (seed % (n as u64 - 1)) as usize;
                random::pencil_through_line(&mut rng, n, pencil, 3)
            }
            Family::Mixed => random::mixed(&mut rng, n, 2),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown family {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchCase {
    pub n: usize,
    pub family: Family,
    pub seed: u64,
    pub degree: i64,
    /// Rank four, no line on three planes, no point on four planes.
    pub general_position: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub seed: u64,
    pub trials: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub families: Vec<Family>,
    pub cases: Vec<SearchCase>,
    /// Indices into `cases` with degree one.
    pub degree_one: Vec<usize>,
    /// Whether every degree-one case has four planes in general position.
    pub degree_one_only_general_four: bool,
}

pub fn general_position(planes: &HyperplaneSet, inc: &IncidenceP3) -> bool {
    matrix::rank(planes.covectors()) == 4
        && inc.lines.iter().all(|l| l.k() == 2)
        && inc.points.iter().all(|p| p.k() == 3)
}

/// Samples `trials` arrangements for every plane count in `n_min..=n_max`
/// and every family, recording the degree of each.
pub fn search_degree_one(
    n_min: usize,
    n_max: usize,
    families: &[Family],
    trials: usize,
    seed: u64,
) -> Result<SearchReport> {
    if families.is_empty() {
        return Err(Error::Precondition("at least one family is required".into()));
    }
    if n_min < 3 || n_max > 7 || n_min > n_max {
        return Err(Error::Precondition(format!(
            "plane counts must satisfy 3 <= n_min <= n_max <= 7, got {n_min}..={n_max}"
        )));
    }
    let mut cases = Vec::new();
    let mut index = 0u64;
    for n in n_min..=n_max {
        for &family in families {
            for _ in 0..trials {
                let case_seed = derive_seed(seed, index);
                index += 1;
                let planes = family.sample(n, case_seed);
                let inc = incidence_p3(&planes)?;
                cases.push(SearchCase {
                    n,
                    family,
                    seed: case_seed,
                    degree: degree_p3(&inc),
                    general_position: general_position(&planes, &inc),
                });
            }
        }
    }
    let degree_one: Vec<usize> = (0..cases.len()).filter(|&i| cases[i].degree == 1).collect();
    let degree_one_only_general_four = degree_one
        .iter()
        .all(|&i| cases[i].n == 4 && cases[i].general_position);
    Ok(SearchReport {
        seed,
        trials,
        n_min,
        n_max,
        families: families.to_vec(),
        cases,
        degree_one,
        degree_one_only_general_four,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_search() {
        let r = search_degree_one(3, 5, &[Family::Generic], 3, 1).unwrap();
        assert_eq!(r.cases.len(), 9);
        for c in &r.cases {
            match c.n {
                3 => assert_eq!(c.degree, 0),
                4 => assert_eq!((c.degree, c.general_position), (1, true)),
                _ => assert_eq!(c.degree, 4),
            }
        }
        assert!(r.degree_one_only_general_four);
        assert_eq!(r.degree_one.len(), 3);
    }

    #[test]
    fn deterministic() {
        let a = search_degree_one(3, 6, &Family::ALL, 4, 9).unwrap();
        let b = search_degree_one(3, 6, &Family::ALL, 4, 9).unwrap();
        assert_eq!(a, b);
        assert!(a.degree_one_only_general_four);
    }

    #[test]
    fn rejected_inputs() {
        assert!(search_degree_one(3, 5, &[], 3, 1).is_err());
        assert!(search_degree_one(2, 5, &[Family::Mixed], 3, 1).is_err());
        assert!(search_degree_one(3, 8, &[Family::Mixed], 3, 1).is_err());
        assert_eq!("near-bundle".parse::<Family>().unwrap(), Family::NearBundle);
    }
}
