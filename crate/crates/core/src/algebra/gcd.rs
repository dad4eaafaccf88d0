//! Multivariate GCD by content/primitive-part recursion.
//!
//! Each level picks the highest-index variable present as the main variable,
//! splits off the content (a GCD one level down) and runs a primitive
//! pseudo-remainder sequence on the primitive parts. The base case is a
//! univariate subresultant GCD.

use super::{Polynomial, UniPoly};
use crate::error::{Error, Result};

/// Largest ring size accepted by [`gcd_multi`].
pub const GCD_MAX_VARS: usize = 3;

/// Primitive greatest common divisor of a list of polynomials in at most
/// three variables. Zero entries are ignored.
pub fn gcd_multi(polys: &[Polynomial]) -> Result<Polynomial> {
    let Some(first) = polys.iter().find(|p| !p.is_zero()) else {
        return Err(Error::ZeroPolynomial);
    };
    let nvars = first.nvars();
    if nvars > GCD_MAX_VARS {
        return Err(Error::UnsupportedVariableCount {
            nvars,
            reason: "multivariate gcd supports at most three variables",
        });
    }
    for p in polys {
        first.check_ring(p)?;
    }
    let mut g = first.primitive();
    for p in polys.iter().filter(|p| !p.is_zero()) {
        if g.is_constant() {
            break;
        }
        g = gcd_pair(&g, p);
    }
    Ok(g)
}

fn main_var(a: &Polynomial, b: &Polynomial) -> Option<usize> {
    (0..a.nvars()).rev().find(|&v| a.involves(v) || b.involves(v))
}

pub(crate) fn gcd_pair(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let n = a.nvars();
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let Some(v) = main_var(a, b) else {
        return Polynomial::one(n);
    };
    if !a.involves(v) {
        return gcd_pair(a, &content(b, v));
    }
    if !b.involves(v) {
        return gcd_pair(&content(a, v), b);
    }
    if a.support().len() == 1 && b.support().len() == 1 {
        return univariate_gcd(a, b, v);
    }
    let ca = content(a, v);
    let cb = content(b, v);
    let c = gcd_pair(&ca, &cb);
    let pa = div(a, &ca);
    let pb = div(b, &cb);
    let (mut f, mut g) = if pa.degree_in(v) >= pb.degree_in(v) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = pseudo_rem(&f, &g, v);
        if r.is_zero() {
            break;
        }
        if !r.involves(v) {
            return c;
        }
        f = g;
        g = primitive_part(&r, v);
    }
    (&c * &primitive_part(&g, v)).primitive()
}

fn univariate_gcd(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let to_uni = |p: &Polynomial| {
        UniPoly::new(
            p.coefficients_in(v)
                .iter()
                .map(Polynomial::constant_term)
                .collect(),
        )
    };
    let g = to_uni(a).gcd(&to_uni(b)).primitive();
    let n = a.nvars();
    let coeffs: Vec<Polynomial> = g
        .coeffs()
        .iter()
        .map(|c| Polynomial::constant(c.clone(), n))
        .collect();
    Polynomial::from_coefficients_in(v, &coeffs, n)
}

/// GCD of the coefficients of `p` with respect to `x_v`.
fn content(p: &Polynomial, v: usize) -> Polynomial {
    let mut g = Polynomial::zero(p.nvars());
    for c in p.coefficients_in(v) {
        if c.is_zero() {
            continue;
        }
        g = gcd_pair(&g, &c);
        if g.is_constant() {
            return Polynomial::one(p.nvars());
        }
    }
    g
}

fn primitive_part(p: &Polynomial, v: usize) -> Polynomial {
    div(p, &content(p, v)).primitive()
}

fn div(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a.exact_div(b)
        .expect("nonzero divisor")
        .expect("content divides exactly")
}

/// Sparse pseudo-remainder of `f` by `g` in the main variable `x_v`.
fn pseudo_rem(f: &Polynomial, g: &Polynomial, v: usize) -> Polynomial {
    let dg = g.degree_in(v).unwrap();
    let gc = g.coefficients_in(v);
    let lg = &gc[dg as usize];
    let mut r = f.clone();
    while let Some(dr) = r.degree_in(v).filter(|&d| d >= dg && !r.is_zero()) {
        let lr = &r.coefficients_in(v)[dr as usize];
        let mut shift = vec![0; r.nvars()];
        shift[v] = dr - dg;
        let shift = super::Monomial::new(shift);
        let t = g.mul_term(&shift, &num_traits::One::one());
        r = &(lg * &r) - &(lr * &t);
    }
    r
}
