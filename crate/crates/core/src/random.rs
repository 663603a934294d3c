//! Seeded fixture generators. Same arguments, same output, on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::{ratio, Rational};
use crate::table::NAryTable;
use crate::tensor::{all_tuples, Tensor};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer entries drawn uniformly from `[-bound, bound]`.
pub fn random_tensor(p: usize, q: usize, dim: usize, seed: u64, bound: u32) -> Tensor {
    let mut rng = rng(seed);
    let b = bound as i64;
    let entries = all_tuples(p + q, dim)
        .map(|idx| (idx, ratio(rng.random_range(-b..=b), 1)))
        .collect();
    Tensor::from_map(p, q, dim, entries)
}

/// Entries `n/d` with `n ∈ [-bound, bound]`, `d ∈ [1, bound]`.
pub fn random_rational_tensor(p: usize, q: usize, dim: usize, seed: u64, bound: u32) -> Tensor {
    let mut rng = rng(seed);
    let entries = all_tuples(p + q, dim)
        .map(|idx| (idx, random_rational(&mut rng, bound)))
        .collect();
    Tensor::from_map(p, q, dim, entries)
}

pub fn random_rational<R: Rng>(rng: &mut R, bound: u32) -> Rational {
    let b = bound.max(1) as i64;
    ratio(rng.random_range(-b..=b), rng.random_range(1..=b))
}

/// Random n-ary table; each constant is nonzero with probability `density`
/// and then an integer in `[-bound, bound]`.
pub fn random_table(n: usize, dim: usize, seed: u64, bound: u32, density: f64) -> NAryTable {
    let mut rng = rng(seed);
    let b = bound as i64;
    let entries = all_tuples(n + 1, dim)
        .filter_map(|idx| {
            let keep = rng.random_bool(density);
            let v = rng.random_range(-b..=b);
            (keep && v != 0).then(|| (idx, ratio(v, 1)))
        })
        .collect();
    NAryTable::from_map(n, dim, entries)
}
