//! Inputs shared by the benchmarks.

use cremona_core::arrangement::random;
use cremona_core::rng::seeded;
use cremona_core::{parse_poly_in, HyperplaneSet, Polynomial};

/// Plane curves of increasing difficulty for the degree computation.
pub fn curves() -> Vec<(&'static str, Polynomial)> {
    [
        ("conic-plus-tangent", "x0*(x0*x2 + x1^2)"),
        ("nodal-cubic", "x1^2*x2 - x0^2*(x0 + x2)"),
        ("smooth-quartic", "x0^4 + x1^4 + x2^4"),
        ("quintic", "x0^5 + x1^5 + x2^5 + x0*x1*x2^3"),
    ]
    .into_iter()
    .map(|(name, text)| (name, parse_poly_in(text, 3).expect("valid curve").poly))
    .collect()
}

/// Random plane arrangements with `n` planes.
pub fn plane_arrangements(n: usize, count: usize) -> Vec<HyperplaneSet> {
    let mut rng = seeded(n as u64);
    (0..count).map(|_| random::mixed(&mut rng, n, 2)).collect()
}
