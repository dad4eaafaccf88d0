//! Seeded randomness shared by the randomized algorithms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{int, Scalar};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent sub-seed for the `index`-th child computation of `seed`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn int_in(rng: &mut SeededRng, bound: i64) -> i64 {
    rng.random_range(-bound..=bound)
}

pub fn scalar_in(rng: &mut SeededRng, bound: i64) -> Scalar {
    int(int_in(rng, bound))
}

pub fn int_vec(rng: &mut SeededRng, len: usize, bound: i64) -> Vec<i64> {
    (0..len).map(|_| int_in(rng, bound)).collect()
}
