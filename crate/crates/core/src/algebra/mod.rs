//! Exact rational arithmetic and polynomial algebra.

mod gcd;
pub mod matrix;
mod poly;
mod resultant;
mod unipoly;

use num_traits::Zero;

pub use gcd::{gcd_multi, GCD_MAX_VARS};
pub use poly::{Monomial, Polynomial};
pub use resultant::resultant_elim;
pub use unipoly::UniPoly;

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Scalar = num_rational::BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(v.into())
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(n.into(), d.into())
}

/// `∂P/∂x_var`.
pub fn derivative(p: &Polynomial, var: usize) -> Result<Polynomial> {
    p.derivative(var)
}

/// Checks the Euler identity `sum_i x_i ∂F/∂x_i = d F`.
pub fn euler_check(f: &Polynomial) -> Result<bool> {
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = f.nvars();
    let d = f.degree().unwrap_or(0);
    let lhs = f
        .gradient()
        .iter()
        .enumerate()
        .fold(Polynomial::zero(n), |acc, (i, g)| {
            acc + &Polynomial::var(i, n) * g
        });
    Ok(lhs == f.scale(&int(d.into())))
}

/// Symbolic Hessian matrix `∂²F/∂x_i∂x_j`.
pub fn hessian(f: &Polynomial) -> Vec<Vec<Polynomial>> {
    let grad = f.gradient();
    grad.iter().map(Polynomial::gradient).collect()
}

/// Determinant of the Hessian matrix.
pub fn hessian_det(f: &Polynomial) -> Polynomial {
    jacobian_det(&f.gradient())
}

/// Determinant of the Jacobian matrix of `maps` (one polynomial per variable).
///
/// Cofactor expansion up to 3x3, fraction-free elimination beyond.
pub fn jacobian_det(maps: &[Polynomial]) -> Polynomial {
    let n = maps.first().map_or(0, Polynomial::nvars);
    assert_eq!(maps.len(), n, "square Jacobian required");
    let h: Vec<Vec<Polynomial>> = maps.iter().map(Polynomial::gradient).collect();
    match n {
        0 => Polynomial::one(0),
        1 => h[0][0].clone(),
        2 => &(&h[0][0] * &h[1][1]) - &(&h[0][1] * &h[1][0]),
        3 => {
            let minor = |a: usize, b: usize, c: usize, d: usize| {
                &(&h[1][a] * &h[2][b]) - &(&h[1][c] * &h[2][d])
            };
            &(&(&h[0][0] * &minor(1, 2, 2, 1)) - &(&h[0][1] * &minor(0, 2, 2, 0)))
                + &(&h[0][2] * &minor(0, 1, 1, 0))
        }
        _ => matrix::bareiss_det(h, Polynomial::one(n)),
    }
}

/// Whether `a` divides `b` exactly.
pub fn divides(a: &Polynomial, b: &Polynomial) -> Result<bool> {
    a.divides(b)
}

pub fn squarefree_part(u: &UniPoly) -> Result<UniPoly> {
    u.squarefree_part()
}

pub fn gcd_uni(u: &UniPoly, v: &UniPoly) -> UniPoly {
    u.gcd(v)
}

/// Whether every coefficient is zero; convenience for scalar slices.
pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}
