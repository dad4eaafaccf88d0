//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Scalar;
use crate::error::{Error, Result};

/// Exponent vector of a monomial.
///
/// Ordered graded-lexicographically with `x0 > x1 > ...`, so the greatest
/// monomial of a [`Polynomial`] is its leading monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(index: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `nvars` variables over the rationals.
///
/// Zero coefficients are never stored, so the zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(Scalar::one(), nvars)
    }

    pub fn constant(c: Scalar, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn from_int(c: i64, nvars: usize) -> Self {
        Self::constant(Scalar::from_integer(c.into()), nvars)
    }

    /// The variable `x_index`.
    pub fn var(index: usize, nvars: usize) -> Self {
        assert!(index < nvars, "variable x{index} outside {nvars} variables");
        Self::monomial(Monomial::var(index, nvars), Scalar::one())
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let mut p = Self::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging repeats.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Scalar)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length mismatch");
            p.add_term(Monomial(e), c);
        }
        p
    }

    /// Linear form `sum_i coeffs[i] * x_i`.
    pub fn linear_form(coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(i, n), c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one(self.nvars))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Scalar {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    /// Highest power of `x_var` occurring; `None` for zero.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    /// Indices of variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.involves(v)).collect()
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn sub_term(&mut self, m: Monomial, c: Scalar) {
        self.add_term(m, -c);
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(n, a)| (n.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative with respect to `x_var`.
    pub fn derivative(&self, var: usize) -> Result<Polynomial> {
        if var >= self.nvars {
            return Err(Error::VariableOutOfRange {
                index: var,
                nvars: self.nvars,
            });
        }
        let mut d = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e > 0 {
                let mut dm = m.clone();
                dm.0[var] -= 1;
                d.add_term(dm, c * Scalar::from_integer(e.into()));
            }
        }
        Ok(d)
    }

    /// All first partials.
    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.nvars)
            .map(|i| self.derivative(i).expect("index in range"))
            .collect()
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars, "evaluation point dimension");
        let mut powers: Vec<Vec<Scalar>> = vec![vec![Scalar::one()]; self.nvars];
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut powers[v];
                while table.len() <= e as usize {
                    let next = table.last().unwrap() * &point[v];
                    table.push(next);
                }
                t *= &table[e as usize];
            }
            acc += t;
        }
        acc
    }

    /// Replaces each variable `x_i` by `images[i]`; all images share a variable count.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target = images.first().map_or(0, Polynomial::nvars);
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| {
                assert_eq!(p.nvars, target, "images must share a ring");
                vec![Polynomial::one(target)]
            })
            .collect();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone(), target);
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut powers[v];
                while table.len() <= e as usize {
                    let next = table.last().unwrap() * &images[v];
                    table.push(next);
                }
                t = &t * &table[e as usize];
            }
            acc = acc + t;
        }
        acc
    }

    /// Linear change of coordinates `x -> M x`, i.e. `x_i -> sum_j m[i][j] x_j`.
    pub fn linear_change(&self, m: &[Vec<Scalar>]) -> Polynomial {
        let images: Vec<Polynomial> = m.iter().map(|row| Polynomial::linear_form(row)).collect();
        self.substitute(&images)
    }

    /// Sets `x_var = value` and drops that variable from the ring.
    pub fn specialize(&self, var: usize, value: &Scalar) -> Polynomial {
        let n = self.nvars - 1;
        let mut out = Polynomial::zero(n);
        let mut pw: Vec<Scalar> = vec![Scalar::one()];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            while pw.len() <= e {
                let next = pw.last().unwrap() * value;
                pw.push(next);
            }
            let mut rest = m.0.clone();
            rest.remove(var);
            out.add_term(Monomial(rest), c * &pw[e]);
        }
        out
    }

    /// Coefficients with respect to `x_var`, lowest power first; each
    /// coefficient stays in the same ring and does not involve `x_var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Polynomial::zero(self.nvars); deg + 1];
        if self.is_zero() {
            return Vec::new();
        }
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut rest = m.clone();
            rest.0[var] = 0;
            out[e].add_term(rest, c.clone());
        }
        out
    }

    /// Reassembles `sum_i coeffs[i] * x_var^i`.
    pub fn from_coefficients_in(var: usize, coeffs: &[Polynomial], nvars: usize) -> Polynomial {
        let mut out = Polynomial::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            let mut shift = Monomial::one(nvars);
            shift.0[var] = i as u32;
            for (m, a) in &c.terms {
                out.add_term(m.mul(&shift), a.clone());
            }
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder. Graded-lexicographic long division.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        self.check_ring(divisor)?;
        let (lm, lc) = divisor.leading_term().expect("nonzero");
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let Some(qm) = m.checked_div(&lm) else {
                return Ok(None);
            };
            let qc = c / &lc;
            for (dm, dc) in &divisor.terms {
                rem.sub_term(dm.mul(&qm), dc * &qc);
            }
            quot.add_term(qm, qc);
        }
        Ok(Some(quot))
    }

    /// Whether `self` divides `other` exactly.
    pub fn divides(&self, other: &Polynomial) -> Result<bool> {
        Ok(other.exact_div(self)?.is_some())
    }

    /// Rescales to integer coefficients with content 1 and a positive leading
    /// coefficient. The zero polynomial is returned unchanged.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            num = num.gcd(&(c.numer() * (&den / c.denom())));
        }
        let mut factor = Scalar::new(den, num);
        if self.leading_coefficient().is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coefficient().recip())
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(self.nvars),
            Some(first) => it.fold(first.clone(), |g, m| g.gcd(m)),
        }
    }

    pub(crate) fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    /// Embeds into a ring with `nvars >= self.nvars()` variables.
    pub fn extend_vars(&self, nvars: usize) -> Polynomial {
        assert!(nvars >= self.nvars);
        Polynomial {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.resize(nvars, 0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.sub_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        for (m, c) in rhs.terms {
            self.sub_term(m, c);
        }
        self
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

fn write_scalar(f: &mut fmt::Formatter<'_>, c: &Scalar) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Canonical form: terms in descending graded-lex order, e.g. `2*x0*x2 + x1^2`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let mut first = true;
            if !a.is_one() || m.is_one() {
                write_scalar(f, &a)?;
                first = false;
            }
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "x{v}")?;
                } else {
                    write!(f, "x{v}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(i, 3)
    }

    fn int(c: i64) -> Polynomial {
        Polynomial::from_int(c, 3)
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::new(vec![1, 0, 0]);
        let b = Monomial::new(vec![0, 1, 0]);
        let c = Monomial::new(vec![0, 0, 2]);
        assert!(a > b);
        assert!(c > a);
    }

    #[test]
    fn derivative_examples() {
        let f = &(&x(0) * &x(1)) * &x(2);
        assert_eq!(f.derivative(0).unwrap(), &x(1) * &x(2));
        let g = &x(0) * &(&(&x(0) * &x(2)) + &x(1).pow(2));
        let expected = &(&int(2) * &(&x(0) * &x(2))) + &x(1).pow(2);
        assert_eq!(g.derivative(0).unwrap(), expected);
        assert!(int(7).derivative(1).unwrap().is_zero());
        assert_eq!(
            f.derivative(3),
            Err(Error::VariableOutOfRange { index: 3, nvars: 3 })
        );
    }

    #[test]
    fn display_canonical() {
        let g = &(&int(2) * &(&x(0) * &x(2))) + &x(1).pow(2);
        assert_eq!(g.to_string(), "2*x0*x2 + x1^2");
        let h = &x(1) - &x(0).scale(&Scalar::new(3.into(), 2.into()));
        assert_eq!(h.to_string(), "-3/2*x0 + x1");
        assert_eq!(Polynomial::zero(2).to_string(), "0");
        assert_eq!((&int(-1) + &x(2)).to_string(), "x2 - 1");
    }

    #[test]
    fn exact_division() {
        let a = &x(0) + &x(1);
        let b = &x(0).pow(2) - &x(1).pow(2);
        assert_eq!(b.exact_div(&a).unwrap(), Some(&x(0) - &x(1)));
        assert!(x(0).divides(&(&x(0).pow(2) * &x(1))).unwrap());
        assert!(!x(0).divides(&(&x(1) + &int(1))).unwrap());
        assert_eq!(x(0).divides(&Polynomial::zero(3)), Ok(true));
        assert_eq!(
            Polynomial::zero(3).divides(&x(0)),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn primitive_normalizes_sign_and_content() {
        let p = (&x(0) + &x(1)).scale(&Scalar::new((-4).into(), 6.into()));
        assert_eq!(p.primitive(), &x(0) + &x(1));
    }

    #[test]
    fn specialize_and_coefficients() {
        let p = &(&x(0) * &x(2).pow(2)) + &x(1);
        let q = p.specialize(0, &Scalar::from_integer(2.into()));
        assert_eq!(q.nvars(), 2);
        assert_eq!(q.to_string(), "2*x1^2 + x0");
        let cs = p.coefficients_in(2);
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[0], x(1));
        assert!(cs[1].is_zero());
        assert_eq!(cs[2], x(0));
        assert_eq!(Polynomial::from_coefficients_in(2, &cs, 3), p);
    }
}
