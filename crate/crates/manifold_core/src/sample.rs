//! Deterministic seeded sampling of chart points.

use crate::manifold::ChartedManifold;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn sample_point(m: &ChartedManifold, rng: &mut ChaCha8Rng) -> Vec<f64> {
    m.sample_domain.iter().map(|&(lo, hi)| rng.gen_range(lo..hi)).collect()
}

pub fn sample_points(m: &ChartedManifold, n: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut r = rng(seed);
    (0..n).map(|_| sample_point(m, &mut r)).collect()
}

pub fn uniform(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(lo..hi)).collect()
}
