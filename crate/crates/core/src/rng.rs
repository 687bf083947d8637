//! Seeded randomness for reproducible verification runs.
//!
//! Every randomized input is drawn from xoshiro256**, a portable 64-bit
//! generator, seeded explicitly; reports name the algorithm so other
//! implementations can reproduce the exact draws.

use crate::ring::Rational;
use rand::Rng;
use rand::SeedableRng;
use rand_xoshiro::Xoshiro256StarStar;

/// Generator identifier included in report headers.
pub const RNG_ALGORITHM: &str = "xoshiro256**";

pub fn rng_from_seed(seed: u64) -> Xoshiro256StarStar {
    Xoshiro256StarStar::seed_from_u64(seed)
}

/// `n` pairwise distinct integers in `[lo, hi]`, as rationals, in draw
/// order (rejection sampling keeps the stream reproducible).
pub fn distinct_ints(rng: &mut impl Rng, n: usize, lo: i64, hi: i64) -> Vec<Rational> {
    assert!(lo <= hi && (hi - lo + 1) as usize >= n, "range too small");
    let mut picked: Vec<i64> = Vec::with_capacity(n);
    while picked.len() < n {
        let x = rng.random_range(lo..=hi);
        if !picked.contains(&x) {
            picked.push(x);
        }
    }
    picked.into_iter().map(Rational::from_int).collect()
}

/// Random integer coefficient list with degree ≤ `max_deg` and entries
/// in `[lo, hi]`.
pub fn poly_coeffs(rng: &mut impl Rng, max_deg: usize, lo: i64, hi: i64) -> Vec<Rational> {
    let deg = rng.random_range(0..=max_deg);
    (0..=deg)
        .map(|_| Rational::from_int(rng.random_range(lo..=hi)))
        .collect()
}
