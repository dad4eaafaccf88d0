//! Polar maps of homogeneous polynomials, hyperplane arrangement degree
//! formulas and multiplicative Legendre transform checks, all over exact
//! rationals.

pub mod algebra;
pub mod arrangement;
pub mod error;
pub mod legendre;
pub mod parse;
pub mod polar;
pub mod report;
pub mod rng;

pub use algebra::{Monomial, Polynomial, Scalar, UniPoly};
pub use arrangement::{HyperplaneSet, IncidenceP2, IncidenceP3, SearchReport};
pub use error::{Error, Result};
pub use legendre::{CatalogEntry, LegendreReport};
pub use parse::{parse_poly, parse_poly_in, ParseError, PolyExpr};
pub use polar::{
    classify_reduced_curve, polar_system, topological_degree, ClassificationResult, CurveShape,
    DegreeReport, PolarSystem,
};
