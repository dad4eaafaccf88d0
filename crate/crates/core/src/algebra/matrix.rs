//! Fraction-free determinants and exact rational linear algebra.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Polynomial, Scalar, UniPoly};

/// Integral domain operations needed by Bareiss elimination.
pub trait Domain: Clone {
    fn vanishes(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Division known to be exact.
    fn div_exact(&self, other: &Self) -> Self;
}

impl Domain for Scalar {
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

impl Domain for BigInt {
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

impl Domain for UniPoly {
    fn vanishes(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        self.exact_div(other)
            .expect("nonzero pivot")
            .expect("Bareiss division is exact")
    }
}

impl Domain for Polynomial {
    fn vanishes(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        self.exact_div(other)
            .expect("nonzero pivot")
            .expect("Bareiss division is exact")
    }
}

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
///
/// `one` is the multiplicative identity of the entry ring; the determinant of
/// an empty matrix is `one`.
pub fn bareiss_det<T: Domain>(mut m: Vec<Vec<T>>, one: T) -> T {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return one;
    }
    let mut prev = one;
    let mut negate = false;
    for k in 0..n - 1 {
        if m[k][k].vanishes() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].vanishes()) else {
                return m[k][k].clone();
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Rank over the rationals.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    row_echelon(rows.to_vec()).len()
}

/// Nonzero rows of the reduced row echelon form.
pub fn row_echelon(mut m: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    m
}

/// Basis of the right null space `{v : M v = 0}`.
pub fn nullspace(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let rref = row_echelon(rows.to_vec());
    let pivots: Vec<usize> = rref
        .iter()
        .map(|row| row.iter().position(|x| !x.is_zero()).unwrap())
        .collect();
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Scalar::zero(); ncols];
            v[free] = Scalar::one();
            for (row, &p) in rref.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

/// Scales so the first nonzero entry is one; zero vectors are returned unchanged.
pub fn normalize_projective(v: &[Scalar]) -> Vec<Scalar> {
    match v.iter().find(|x| !x.is_zero()) {
        None => v.to_vec(),
        Some(lead) => {
            let inv = lead.recip();
            v.iter().map(|x| x * &inv).collect()
        }
    }
}

/// Determinant over the rationals: rows are cleared of denominators and the
/// elimination runs over the integers.
pub fn det_scalar(m: &[Vec<Scalar>]) -> Scalar {
    let mut scale = BigInt::one();
    let rows: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let den = row.iter().fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
            let out = row.iter().map(|c| c.numer() * (&den / c.denom())).collect();
            scale *= den;
            out
        })
        .collect();
    Scalar::new(bareiss_det(rows, BigInt::one()), scale)
}

/// Inverse of an invertible square matrix, `None` if singular.
pub fn inverse(m: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = m.len();
    let aug: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            r
        })
        .collect();
    let rref = row_echelon(aug);
    if rref.len() < n || (0..n).any(|i| !rref[i][i].is_one()) {
        return None;
    }
    Some(rref.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner);
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}
