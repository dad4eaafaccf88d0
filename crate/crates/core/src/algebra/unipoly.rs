//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Scalar;
use crate::error::{Error, Result};

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Scalar::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Scalar::from_integer(i.into()))
                .collect(),
        )
    }

    fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![Scalar::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: c }
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        (0..e).fold(UniPoly::one(), |acc, _| &acc * self)
    }

    /// Quotient and remainder over the rationals.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = divisor.leading_coefficient();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((UniPoly::zero(), UniPoly::zero()));
        };
        if nd < dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![Scalar::zero(); nd - dd + 1];
        for i in (dd..=nd).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / &lc;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] -= c * &q;
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    /// `self / divisor` when exact, `None` otherwise.
    pub fn exact_div(&self, divisor: &UniPoly) -> Result<Option<UniPoly>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Pseudo-remainder `lc(g)^(deg f - deg g + 1) * f mod g`.
    pub fn pseudo_rem(&self, g: &UniPoly) -> Result<UniPoly> {
        let dg = g.degree().ok_or(Error::ZeroPolynomial)?;
        let Some(df) = self.degree() else {
            return Ok(UniPoly::zero());
        };
        if df < dg {
            return Ok(self.clone());
        }
        let lc = g.leading_coefficient();
        let factor = num_traits::pow(lc, df - dg + 1);
        let (_, r) = self.scale(&factor).div_rem(g)?;
        Ok(r)
    }

    /// Integer coefficients with content 1 and positive leading coefficient.
    pub fn primitive(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = self
            .coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&den / c.denom()))));
        let mut f = Scalar::new(den, num);
        if self.leading_coefficient().is_negative() {
            f = -f;
        }
        self.scale(&f)
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coefficient().recip())
    }

    /// Monic greatest common divisor, computed with a primitive remainder
    /// sequence over the integers. `gcd(0, 0)` is zero.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.integer_coeffs(), other.integer_coeffs())
        } else {
            (other.integer_coeffs(), self.integer_coeffs())
        };
        loop {
            let r = int_prem(a, &b);
            if r.is_empty() {
                return UniPoly::new(b.into_iter().map(Scalar::from_integer).collect()).monic();
            }
            if r.len() == 1 {
                return UniPoly::one();
            }
            a = b;
            b = int_primitive(r);
        }
    }

    /// Coefficients of the primitive integer multiple.
    fn integer_coeffs(&self) -> Vec<BigInt> {
        self.primitive().coeffs.iter().map(|c| c.numer().clone()).collect()
    }

    /// The polynomial of degree below `xs.len()` taking `values[i]` at `xs[i]`
    /// (Newton divided differences). The `xs` must be distinct.
    pub fn interpolate(xs: &[Scalar], values: &[Scalar]) -> UniPoly {
        assert_eq!(xs.len(), values.len());
        let n = xs.len();
        let mut c = values.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                c[i] = (&c[i] - &c[i - 1]) / (&xs[i] - &xs[i - j]);
            }
        }
        let mut out = UniPoly::zero();
        for i in (0..n).rev() {
            let shifted = UniPoly::new(vec![-xs[i].clone(), Scalar::one()]);
            out = &(&out * &shifted) + &UniPoly::constant(c[i].clone());
        }
        out
    }

    /// `u / gcd(u, u')`, primitive. Its degree counts the distinct complex roots.
    pub fn squarefree_part(&self) -> Result<UniPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        let (q, _) = self.div_rem(&g)?;
        Ok(q.primitive())
    }
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Remainder of `lc(b)^k a` by `b` over the integers; `b` nonzero.
fn int_prem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    while a.len() > db {
        let da = a.len() - 1;
        let la = a[da].clone();
        for c in a.iter_mut() {
            *c *= lb;
        }
        for (j, c) in b.iter().enumerate() {
            a[da - db + j] -= &la * c;
        }
        trim(&mut a);
    }
    a
}

fn int_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_one() && !g.is_zero() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Scalar::zero();
        UniPoly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl UniPoly {
    /// `self * x^k`.
    pub fn mul_x_pow(&self, k: usize) -> UniPoly {
        self.shift(k)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let coef = if a.is_integer() {
                a.numer().to_string()
            } else {
                format!("{}/{}", a.numer(), a.denom())
            };
            match i {
                0 => f.write_str(&coef)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{coef}*")?;
                    }
                    if i == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
