//! Recognition of the reduced plane curves with birational polar map, and
//! the reduced-versus-nonreduced comparison probe.

use serde::Serialize;

use super::degree::{topological_degree, DEFAULT_MAX_RETRIES};
use super::polar_system;
use crate::algebra::Polynomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CurveShape {
    NonsingularConic,
    ThreeNonconcurrentLines,
    ConicPlusTangent,
    NotHomaloidal,
    NotReducedOrInvalid,
}

impl CurveShape {
    pub fn is_homaloidal(self) -> bool {
        matches!(
            self,
            CurveShape::NonsingularConic
                | CurveShape::ThreeNonconcurrentLines
                | CurveShape::ConicPlusTangent
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub tag: CurveShape,
    /// Degree of the polar map; absent when the input was rejected.
    pub degree: Option<u64>,
}

impl ClassificationResult {
    fn rejected() -> Self {
        ClassificationResult {
            tag: CurveShape::NotReducedOrInvalid,
            degree: None,
        }
    }
}

/// Classifies a reduced plane curve by the degree of its polar map.
///
/// Degree one leaves three shapes. A conic is recognized by its degree; a
/// cubic by the number of distinct singular points (three nodes for a
/// triangle of lines, one tacnode for a conic with a tangent line), read off
/// the base locus of the polar net.
pub fn classify_reduced_curve(f: &Polynomial, seed: u64) -> Result<ClassificationResult> {
    if f.nvars() != 3 || f.is_zero() || !f.is_homogeneous() || f.is_constant() {
        return Ok(ClassificationResult::rejected());
    }
    let system = polar_system(f)?;
    // A repeated factor divides every partial.
    if system.has_fixed_part() {
        return Ok(ClassificationResult::rejected());
    }
    let report = topological_degree(&system, seed, DEFAULT_MAX_RETRIES)?;
    let degree = report.degree;
    if degree != 1 || report.degenerate_image {
        return Ok(ClassificationResult {
            tag: CurveShape::NotHomaloidal,
            degree: Some(degree),
        });
    }
    let tag = match (system.source_degree, report.base_points) {
        (2, _) => CurveShape::NonsingularConic,
        (3, Some(3)) => CurveShape::ThreeNonconcurrentLines,
        (3, Some(_)) => CurveShape::ConicPlusTangent,
        (d, _) => {
            return Err(Error::Precondition(format!(
                "birational polar map for a reduced curve of degree {d}"
            )))
        }
    };
    Ok(ClassificationResult {
        tag,
        degree: Some(degree),
    })
}

/// Degrees of the polar maps of `F = prod A_i^m_i` and of its reduction
/// `G = prod A_i`. Recorded, not asserted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureRecord {
    pub f: String,
    pub g: String,
    pub fixed_part_f: String,
    pub degree_f: u64,
    pub degree_g: u64,
    pub degenerate_f: bool,
    pub degenerate_g: bool,
    pub agree_on_homaloidal: bool,
}

pub fn conjecture_probe(factors: &[(Polynomial, u32)], seed: u64) -> Result<ConjectureRecord> {
    let Some((first, _)) = factors.first() else {
        return Err(Error::Precondition("at least one factor is required".into()));
    };
    let n = first.nvars();
    if n != 3 {
        return Err(Error::UnsupportedVariableCount {
            nvars: n,
            reason: "the probe works with plane curves",
        });
    }
    if factors.iter().any(|(_, m)| *m == 0) {
        return Err(Error::Precondition("multiplicities must be positive".into()));
    }
    let mut f = Polynomial::one(n);
    let mut g = Polynomial::one(n);
    for (a, m) in factors {
        a.check_ring(first)?;
        f = &f * &a.pow(*m);
        g = &g * a;
    }
    let sg = polar_system(&g)?;
    if sg.has_fixed_part() {
        return Err(Error::Precondition(
            "factors must be square-free and pairwise coprime".into(),
        ));
    }
    let sf = polar_system(&f)?;
    let rf = topological_degree(&sf, seed, DEFAULT_MAX_RETRIES)?;
    let rg = topological_degree(&sg, seed, DEFAULT_MAX_RETRIES)?;
    let hf = rf.degree == 1 && !rf.degenerate_image;
    let hg = rg.degree == 1 && !rg.degenerate_image;
    Ok(ConjectureRecord {
        f: f.to_string(),
        g: g.to_string(),
        fixed_part_f: sf.fixed_part.to_string(),
        degree_f: rf.degree,
        degree_g: rg.degree,
        degenerate_f: rf.degenerate_image,
        degenerate_g: rg.degenerate_image,
        agree_on_homaloidal: hf == hg,
    })
}
