//! Sylvester resultants of bivariate polynomials.

use super::matrix::det_scalar;
use super::{int, Polynomial, Scalar, UniPoly};
use crate::error::{Error, Result};

/// Converts a polynomial in two variables into its coefficient list with
/// respect to `elim_var`, each coefficient a univariate polynomial in the
/// other variable.
fn as_uni_over_uni(p: &Polynomial, elim_var: usize) -> Vec<UniPoly> {
    let other = 1 - elim_var;
    let deg = p.degree_in(elim_var).unwrap_or(0) as usize;
    let mut out: Vec<Vec<_>> = vec![Vec::new(); deg + 1];
    for (m, c) in p.terms() {
        let e = m.exponents();
        let row = &mut out[e[elim_var] as usize];
        let k = e[other] as usize;
        if row.len() <= k {
            row.resize(k + 1, num_traits::Zero::zero());
        }
        row[k] += c;
    }
    out.into_iter().map(UniPoly::new).collect()
}

/// Sylvester resultant of `a` and `b` with respect to `elim_var`, as a
/// polynomial in the remaining variable.
pub fn resultant_elim(a: &Polynomial, b: &Polynomial, elim_var: usize) -> Result<UniPoly> {
    a.check_ring(b)?;
    if a.nvars() != 2 {
        return Err(Error::NotBivariate(a.nvars()));
    }
    if elim_var > 1 {
        return Err(Error::VariableOutOfRange {
            index: elim_var,
            nvars: 2,
        });
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ca = as_uni_over_uni(a, elim_var);
    let cb = as_uni_over_uni(b, elim_var);
    let m = ca.len() - 1;
    let n = cb.len() - 1;
    if m == 0 && n == 0 {
        return Err(Error::ConstantInEliminationVariable);
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        rows.push(sylvester_row(&ca, shift, size));
    }
    for shift in 0..m {
        rows.push(sylvester_row(&cb, shift, size));
    }
    let bezout = (a.degree().unwrap_or(0) * b.degree().unwrap_or(0)) as usize;
    Ok(det_by_interpolation(&rows, bezout))
}

/// Determinant of a matrix of univariate polynomials, from its values at
/// `0, 1, ..., D`. `D` is the smaller of `degree_bound` and the sum of row
/// maxima.
fn det_by_interpolation(rows: &[Vec<UniPoly>], degree_bound: usize) -> UniPoly {
    let row_bound: usize = rows
        .iter()
        .map(|r| r.iter().filter_map(UniPoly::degree).max().unwrap_or(0))
        .sum();
    let bound = row_bound.min(degree_bound);
    let xs: Vec<Scalar> = (0..=bound).map(|i| int(i as i64)).collect();
    let values: Vec<Scalar> = xs
        .iter()
        .map(|x| {
            let m: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|c| c.eval(x)).collect()).collect();
            det_scalar(&m)
        })
        .collect();
    UniPoly::interpolate(&xs, &values)
}

// Coefficients from the leading one down, shifted right by `shift`.
fn sylvester_row(coeffs: &[UniPoly], shift: usize, size: usize) -> Vec<UniPoly> {
    let mut row = vec![UniPoly::zero(); size];
    for (j, c) in coeffs.iter().rev().enumerate() {
        row[shift + j] = c.clone();
    }
    row
}
