//! Seeded instance generators for property suites and benchmarks.
//!
//! Every generator takes an explicit `ChaCha8Rng`, so the same seed always yields
//! the same instances on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::family::{SetFamily, Transversal};

/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random non-empty subset of `[n]`, each element kept with probability `p`.
pub fn random_subset<R: Rng>(rng: &mut R, n: usize, p: f64) -> Vec<usize> {
    loop {
        let set: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(p)).collect();
        if !set.is_empty() {
            return set;
        }
    }
}

/// `members` random non-empty subsets of `[n]`, with density drawn per family.
pub fn random_family<R: Rng>(rng: &mut R, n: usize, members: usize) -> SetFamily {
    let p = rng.gen_range(0.15..0.75);
    let sets = (0..members).map(|_| random_subset(rng, n, p)).collect();
    SetFamily::new(n, sets).expect("subsets of [n]")
}

/// A random family with `|F| = n` over `[n]`.
pub fn random_square_family<R: Rng>(rng: &mut R, n: usize) -> SetFamily {
    random_family(rng, n, n)
}

/// The triangular family with member `k = {k} ∪ A_k`, `A_k ⊆ [k-1]`, where bit `j`
/// of `masks[k-1]` puts `j + 1` in `A_k`. Its unique transversal is the identity.
pub fn triangular_family(n: usize, masks: &[u64]) -> SetFamily {
    let members = (1..=n)
        .map(|k| {
            let mut set: Vec<usize> = (1..k)
                .filter(|&j| masks[k - 1] >> (j - 1) & 1 == 1)
                .collect();
            set.push(k);
            set
        })
        .collect();
    SetFamily::new(n, members).expect("triangular family is valid")
}

/// Every triangular family over `[n]`: `2^(n(n-1)/2)` of them.
///
/// Any shellable family with `|F| = n` becomes one of these after renaming its
/// elements and reordering its members.
pub fn triangular_families(n: usize) -> impl Iterator<Item = SetFamily> {
    let bits = n * n.saturating_sub(1) / 2;
    assert!(bits < 64, "too many triangular families for n = {n}");
    (0..1u64 << bits).map(move |code| {
        let mut masks = Vec::with_capacity(n);
        let mut offset = 0;
        for k in 1..=n {
            masks.push((code >> offset) & ((1u64 << (k - 1)) - 1));
            offset += k - 1;
        }
        triangular_family(n, &masks)
    })
}

pub fn identity_transversal(n: usize) -> Transversal {
    Transversal::new((1..=n).collect())
}

/// A random shellable family with `|F| = n`, together with its unique transversal.
///
/// Built as a random triangular family whose elements are then renamed and whose
/// members are shuffled.
pub fn random_shellable_family<R: Rng>(rng: &mut R, n: usize) -> (SetFamily, Transversal) {
    let p = rng.gen_range(0.2..0.8);
    let masks: Vec<u64> = (1..=n)
        .map(|k| {
            (0..k - 1)
                .filter(|_| rng.gen_bool(p))
                .fold(0, |acc, j| acc | 1 << j)
        })
        .collect();
    let base = triangular_family(n, &masks);

    let mut names: Vec<usize> = (1..=n).collect();
    names.shuffle(rng);
    let mut relabel = vec![0];
    relabel.extend(names);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);

    let fam = base
        .relabeled(&relabel, &order)
        .expect("relabeling is a bijection");
    let t = Transversal::new(order.iter().map(|&i| relabel[i + 1]).collect());
    (fam, t)
}

/// Every ordered family of `members` non-empty subsets of `[n]`.
pub fn all_families(n: usize, members: usize) -> impl Iterator<Item = SetFamily> {
    let subsets = (1u64 << n) - 1;
    let total = subsets
        .checked_pow(members as u32)
        .expect("family count fits in u64");
    (0..total).map(move |mut code| {
        let sets = (0..members)
            .map(|_| {
                let mask = code % subsets + 1;
                code /= subsets;
                (1..=n).filter(|&e| mask >> (e - 1) & 1 == 1).collect()
            })
            .collect();
        SetFamily::new(n, sets).expect("subsets of [n]")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::all_transversals;
    use crate::shelling::is_shellable;

    #[test]
    fn same_seed_same_family() {
        let a = random_family(&mut rng(7), 6, 5);
        let b = random_family(&mut rng(7), 6, 5);
        assert_eq!(a, b);
    }

    #[test]
    fn random_shellable_is_shellable_with_given_transversal() {
        let mut r = rng(11);
        for n in 1..=7 {
            for _ in 0..20 {
                let (fam, t) = random_shellable_family(&mut r, n);
                assert!(is_shellable(&fam).unwrap(), "{fam}");
                assert_eq!(all_transversals(&fam).unwrap(), vec![t]);
            }
        }
    }

    #[test]
    fn triangular_counts() {
        assert_eq!(triangular_families(1).count(), 1);
        assert_eq!(triangular_families(3).count(), 8);
        assert_eq!(triangular_families(4).count(), 64);
        for fam in triangular_families(4) {
            assert!(is_shellable(&fam).unwrap());
            assert_eq!(
                all_transversals(&fam).unwrap(),
                vec![identity_transversal(4)]
            );
        }
    }

    #[test]
    fn all_families_count_and_distinct() {
        let fams: Vec<_> = all_families(2, 2).collect();
        assert_eq!(fams.len(), 9);
        let mut dedup = fams.clone();
        dedup.sort_by_key(|f| f.members().to_vec());
        dedup.dedup();
        assert_eq!(dedup.len(), 9);
    }
}
