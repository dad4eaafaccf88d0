//! Random arrangements with integer coefficients, including structured
//! families that force special incidences.

use num_traits::Zero;
use rand::Rng;

use super::HyperplaneSet;
use crate::algebra::{int, matrix, Scalar};
use crate::rng::{int_in, int_vec, SeededRng};

const MAX_ATTEMPTS: usize = 1000;

fn ints(v: Vec<i64>) -> Vec<Scalar> {
    v.into_iter().map(int).collect()
}

fn nonzero(rng: &mut SeededRng, len: usize, bound: i64) -> Vec<Scalar> {
    loop {
        let v = ints(int_vec(rng, len, bound));
        if !v.iter().all(Zero::is_zero) {
            return v;
        }
    }
}

/// A random nonzero combination of `basis` with coefficients in `[-bound, bound]`.
fn combination(rng: &mut SeededRng, basis: &[Vec<Scalar>], bound: i64) -> Vec<Scalar> {
    loop {
        let coeffs = int_vec(rng, basis.len(), bound);
        let mut v = vec![Scalar::zero(); basis[0].len()];
        for (c, b) in coeffs.iter().zip(basis) {
            for (x, y) in v.iter_mut().zip(b) {
                *x += int(*c) * y;
            }
        }
        if !v.iter().all(Zero::is_zero) {
            return v;
        }
    }
}

/// Fills an arrangement by drawing rows until `count` distinct hyperplanes exist.
fn collect(dim: usize, count: usize, mut draw: impl FnMut(usize) -> Vec<Scalar>) -> HyperplaneSet {
    let mut set = HyperplaneSet::new(dim, Vec::new()).expect("valid dimension");
    let mut attempts = 0;
    while set.len() < count {
        attempts += 1;
        assert!(attempts < MAX_ATTEMPTS * count, "coefficient range too small for {count} hyperplanes");
        if let Ok(next) = set.with(draw(set.len())) {
            set = next;
        }
    }
    set
}

/// `s` lines with coefficients in `[-bound, bound]`. Small bounds produce
/// many triple points.
pub fn random_lines(rng: &mut SeededRng, s: usize, bound: i64) -> HyperplaneSet {
    collect(2, s, |_| nonzero(rng, 3, bound))
}

/// `s` lines, each through two of a few random points, so multiple points of
/// high multiplicity are common.
pub fn lines_through_points(rng: &mut SeededRng, s: usize, npoints: usize, bound: i64) -> HyperplaneSet {
    let points: Vec<Vec<Scalar>> = (0..npoints.max(2)).map(|_| nonzero(rng, 3, bound)).collect();
    collect(2, s, |_| {
        let i = rng.random_range(0..points.len());
        let j = rng.random_range(0..points.len());
        let through = matrix::nullspace(&[points[i].clone(), points[j].clone()], 3);
        combination(rng, &through, bound)
    })
}

/// Planes in 3-space with coefficients in `[-bound, bound]`.
pub fn random_planes(rng: &mut SeededRng, n: usize, bound: i64) -> HyperplaneSet {
    collect(3, n, |_| nonzero(rng, 4, bound))
}

/// `n` planes through one random point.
pub fn bundle(rng: &mut SeededRng, n: usize, bound: i64) -> HyperplaneSet {
    let p = nonzero(rng, 4, bound);
    let through = matrix::nullspace(&[p], 4);
    collect(3, n, |_| combination(rng, &through, bound))
}

/// `n - 1` planes through one point and one more plane drawn freely.
pub fn near_bundle(rng: &mut SeededRng, n: usize, bound: i64) -> HyperplaneSet {
    let p = nonzero(rng, 4, bound);
    let through = matrix::nullspace(&[p], 4);
    collect(3, n, |i| {
        if i + 1 < n {
            combination(rng, &through, bound)
        } else {
            nonzero(rng, 4, bound)
        }
    })
}

/// `pencil` planes through one line (at least two), the rest drawn freely.
pub fn pencil_through_line(rng: &mut SeededRng, n: usize, pencil: usize, bound: i64) -> HyperplaneSet {
    let basis = loop {
        let u = nonzero(rng, 4, bound);
        let v = nonzero(rng, 4, bound);
        if matrix::rank(&[u.clone(), v.clone()]) == 2 {
            break vec![u, v];
        }
    };
    let pencil = pencil.clamp(2, n);
    collect(3, n, |i| {
        if i < pencil {
            combination(rng, &basis, bound)
        } else {
            nonzero(rng, 4, bound)
        }
    })
}

/// Each plane passes through a shared point, contains a shared line, or is
/// free, chosen at random.
pub fn mixed(rng: &mut SeededRng, n: usize, bound: i64) -> HyperplaneSet {
    let p = nonzero(rng, 4, bound);
    let through_point = matrix::nullspace(&[p], 4);
    let line = loop {
        let u = nonzero(rng, 4, bound);
        let v = nonzero(rng, 4, bound);
        if matrix::rank(&[u.clone(), v.clone()]) == 2 {
            break vec![u, v];
        }
    };
    collect(3, n, |_| match int_in(rng, 1) {
        -1 => combination(rng, &through_point, bound),
        0 => combination(rng, &line, bound),
        _ => nonzero(rng, 4, bound),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{degree_p3, incidence_p3};
    use crate::rng::seeded;

    #[test]
    fn structured_families() {
        let mut rng = seeded(3);
        let b = bundle(&mut rng, 5, 3);
        assert_eq!(b.len(), 5);
        assert!(matrix::rank(b.covectors()) <= 3);
        assert_eq!(degree_p3(&incidence_p3(&b).unwrap()), 0);

        let p = pencil_through_line(&mut rng, 5, 3, 3);
        let inc = incidence_p3(&p).unwrap();
        assert!(inc.lines.iter().any(|l| l.k() >= 3));

        let l = lines_through_points(&mut rng, 6, 3, 3);
        assert_eq!(l.len(), 6);
    }
}
