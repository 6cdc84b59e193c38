//! Deterministic evaluation-point pools.
//!
//! Points are drawn from a fixed pool of small-height rationals; an
//! optional seed shuffles the pool reproducibly (ChaCha8), so repeated runs
//! with the same seed pick the same points.

use crate::linalg::{rat, rat_frac, Rat};
use rand::seq::SliceRandom;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::FusionError;

/// The fixed pool, pairwise distinct and of small height.
pub fn point_pool() -> Vec<Rat> {
    vec![
        rat(0),
        rat(1),
        rat(-1),
        rat(2),
        rat(5),
        rat(-3),
        rat(7),
        rat_frac(1, 2),
        rat(-2),
        rat(3),
        rat(11),
        rat_frac(-1, 2),
        rat(4),
        rat(-5),
        rat_frac(1, 3),
        rat(9),
    ]
}

/// The first `n` pool points, after an optional seeded shuffle.
pub fn point_set(n: usize, seed: Option<u64>) -> Result<Vec<Rat>, FusionError> {
    let mut pool = point_pool();
    if let Some(seed) = seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        pool.shuffle(&mut rng);
    }
    if n > pool.len() {
        return Err(FusionError::PointPoolExhausted {
            requested: n,
            available: pool.len(),
        });
    }
    pool.truncate(n);
    Ok(pool)
}
