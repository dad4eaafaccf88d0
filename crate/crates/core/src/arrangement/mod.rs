//! Line arrangements in the projective plane and plane arrangements in
//! projective 3-space, with exact incidence data and degree formulas.

mod p2;
mod p3;
pub mod random;
mod search;

use num_traits::Zero;
use serde::Serialize;

pub use p2::{degree_p2_lines, incidence_p2, verify_multiple_point_bound, verify_pair_count, IncidenceP2, MultiplePoint};
pub use p3::{
    all_through_point, blowup_expansion, degree_p3, incidence_p3, monotonicity_check, verify_line_identity,
    verify_triple_count,
    BlowupExpansion, IncidenceP3, LineP3, MonotonicityRecord, PointP3,
};
pub use search::{general_position, search_degree_one, Family, SearchCase, SearchReport};

use crate::algebra::{int, matrix, Polynomial, Scalar};
use crate::error::{Error, Result};

/// Hyperplanes `L_i = 0` in projective `dim`-space, stored as covectors
/// normalized so the first nonzero entry is one. No two are proportional.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HyperplaneSet {
    dim: usize,
    #[serde(serialize_with = "crate::report::scalar_rows")]
    covectors: Vec<Vec<Scalar>>,
}

impl HyperplaneSet {
    pub fn new(dim: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        if dim != 2 && dim != 3 {
            return Err(Error::InvalidHyperplane(format!(
                "dimension must be 2 or 3, got {dim}"
            )));
        }
        let mut covectors: Vec<Vec<Scalar>> = Vec::with_capacity(rows.len());
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != dim + 1 {
                return Err(Error::InvalidHyperplane(format!(
                    "row {i} has {} entries, expected {}",
                    row.len(),
                    dim + 1
                )));
            }
            if row.iter().all(Zero::is_zero) {
                return Err(Error::InvalidHyperplane(format!("row {i} is zero")));
            }
            let v = matrix::normalize_projective(&row);
            if let Some(j) = covectors.iter().position(|c| c == &v) {
                return Err(Error::DuplicateHyperplane(j, i));
            }
            covectors.push(v);
        }
        Ok(HyperplaneSet { dim, covectors })
    }

    pub fn from_ints(dim: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            dim,
            rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.covectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covectors.is_empty()
    }

    pub fn covectors(&self) -> &[Vec<Scalar>] {
        &self.covectors
    }

    /// Adds one hyperplane, rejecting a duplicate.
    pub fn with(&self, extra: Vec<Scalar>) -> Result<Self> {
        let mut rows = self.covectors.clone();
        rows.push(extra);
        Self::new(self.dim, rows)
    }

    /// Product of the linear forms.
    pub fn product(&self) -> Polynomial {
        let n = self.dim + 1;
        self.covectors
            .iter()
            .fold(Polynomial::one(n), |acc, c| &acc * &Polynomial::linear_form(c))
    }
}

pub(crate) fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
