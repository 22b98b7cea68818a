//! Fixed inputs shared by the benchmarks under `benches/`.

use shellable::random::{random_family, random_shellable_family, rng};
use shellable::{hook_family, SetFamily, SkewShape, Transversal};

pub const SEED: u64 = 7;

/// Hook family of the staircase `(k, k-1, ..., 1)`.
pub fn staircase(k: usize) -> (SetFamily, Transversal) {
    hook_family(&SkewShape::normal((1..=k).rev().collect()).expect("staircase is a partition"))
}

/// The 18-cell shape `(6,5,4,3,2,1)/(2,1)`.
pub fn skew_staircase() -> (SetFamily, Transversal) {
    hook_family(&SkewShape::new(vec![6, 5, 4, 3, 2, 1], vec![2, 1]).expect("valid skew shape"))
}

pub fn shellable_batch(n: usize, count: usize) -> Vec<(SetFamily, Transversal)> {
    let mut r = rng(SEED);
    (0..count)
        .map(|_| random_shellable_family(&mut r, n))
        .collect()
}

pub fn random_batch(n: usize, members: usize, count: usize) -> Vec<SetFamily> {
    let mut r = rng(SEED);
    (0..count)
        .map(|_| random_family(&mut r, n, members))
        .collect()
}
