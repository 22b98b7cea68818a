//! Shellable families: orders whose `k`-th prefix union has exactly `k` elements.
//!
//! A finite family is shellable exactly when it has a unique transversal. Both
//! characterizations are implemented here so they can be checked against each other.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::config::{satisfies, Configuration, SurjectiveWord};
use crate::error::{check_bound, Error, Result};
use crate::family::{count_transversals_up_to, SetFamily, Transversal};

/// Member-count bound for the exhaustive (all orders) shelling search.
pub const EXHAUSTIVE_ORDER_BOUND: usize = 9;

/// A permutation of member indices; position `k` holds the member placed `k`-th.
///
/// Indices are 0-based in Rust and serialized as a JSON array of 1-based indices.
/// Reading the order backwards gives the reversed total order on members.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShellingOrder(Vec<usize>);

impl ShellingOrder {
    pub fn new(order: Vec<usize>) -> Self {
        ShellingOrder(order)
    }

    pub fn from_one_based(order: &[usize]) -> Result<Self> {
        order
            .iter()
            .map(|&i| {
                i.checked_sub(1)
                    .ok_or_else(|| Error::InvalidOrder("member indices are 1-based".into()))
            })
            .collect::<Result<Vec<_>>>()
            .map(ShellingOrder)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    pub fn reversed(&self) -> ShellingOrder {
        ShellingOrder(self.0.iter().rev().copied().collect())
    }

    fn check_permutation(&self, len: usize) -> Result<()> {
        let mut seen = vec![false; len];
        if self.0.len() != len {
            return Err(Error::InvalidOrder(format!(
                "order has {} entries, family has {len} members",
                self.0.len()
            )));
        }
        for &i in &self.0 {
            if i >= len || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidOrder(format!(
                    "not a permutation of 1..={len}"
                )));
            }
        }
        Ok(())
    }
}

impl Serialize for ShellingOrder {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_one_based().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ShellingOrder {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<usize>::deserialize(deserializer)?;
        ShellingOrder::from_one_based(&raw).map_err(serde::de::Error::custom)
    }
}

/// True iff every prefix of `order` has a union of exactly its own length.
pub fn verify_shelling_order(fam: &SetFamily, order: &ShellingOrder) -> Result<bool> {
    order.check_permutation(fam.len())?;
    let mut seen = vec![false; fam.n() + 1];
    let mut union = 0;
    for (k, &i) in order.as_slice().iter().enumerate() {
        for &e in fam.member(i) {
            if !seen[e] {
                seen[e] = true;
                union += 1;
            }
        }
        if union != k + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Elements lying in exactly one member (members counted with multiplicity).
pub fn unique_element_set(fam: &SetFamily) -> BTreeSet<usize> {
    fam.element_multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|&(_, &c)| c == 1)
        .map(|(e, _)| e)
        .collect()
}

/// Finds a shelling order by peeling members off the end.
///
/// The last member of a shelling order is the only one containing exactly one
/// element that no other remaining member contains. Repeatedly remove such a member
/// (smallest index first); if that ever gets stuck, backtrack over the other
/// candidates. The result is re-verified before it is returned.
pub fn shelling_order(fam: &SetFamily) -> Result<Option<ShellingOrder>> {
    fam.ensure_nonempty_members()?;
    let mut peel = PeelState {
        fam,
        remaining: vec![true; fam.len()],
        counts: fam.element_multiplicities(),
        peeled: Vec::with_capacity(fam.len()),
        dead_ends: HashSet::new(),
    };
    if !peel.run() {
        return Ok(None);
    }
    peel.peeled.reverse();
    let order = ShellingOrder(peel.peeled);
    if !verify_shelling_order(fam, &order)? {
        unreachable!("peeled order failed verification for {fam}");
    }
    Ok(Some(order))
}

struct PeelState<'a> {
    fam: &'a SetFamily,
    remaining: Vec<bool>,
    counts: Vec<usize>,
    peeled: Vec<usize>,
    dead_ends: HashSet<Vec<bool>>,
}

impl PeelState<'_> {
    fn private_count(&self, member: usize) -> usize {
        self.fam
            .member(member)
            .iter()
            .filter(|&&e| self.counts[e] == 1)
            .count()
    }

    fn run(&mut self) -> bool {
        if self.peeled.len() == self.fam.len() {
            return true;
        }
        if self.dead_ends.contains(&self.remaining) {
            return false;
        }
        let candidates: Vec<usize> = (0..self.fam.len())
            .filter(|&i| self.remaining[i] && self.private_count(i) == 1)
            .collect();
        for member in candidates {
            self.remove(member);
            if self.run() {
                return true;
            }
            self.restore(member);
        }
        self.dead_ends.insert(self.remaining.clone());
        false
    }

    fn remove(&mut self, member: usize) {
        self.remaining[member] = false;
        for &e in self.fam.member(member) {
            self.counts[e] -= 1;
        }
        self.peeled.push(member);
    }

    fn restore(&mut self, member: usize) {
        self.peeled.pop();
        for &e in self.fam.member(member) {
            self.counts[e] += 1;
        }
        self.remaining[member] = true;
    }
}

/// Tries every ordering of the members. Oracle for [`shelling_order`].
pub fn shelling_order_exhaustive(fam: &SetFamily) -> Result<Option<ShellingOrder>> {
    fam.ensure_nonempty_members()?;
    check_bound("member count", fam.len(), EXHAUSTIVE_ORDER_BOUND)?;
    let mut perm: Vec<usize> = (0..fam.len()).collect();
    loop {
        let order = ShellingOrder(perm.clone());
        if verify_shelling_order(fam, &order)? {
            return Ok(Some(order));
        }
        if !crate::perm::next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}

/// Whether `fam` is shellable, decided by [`shelling_order`].
pub fn is_shellable(fam: &SetFamily) -> Result<bool> {
    Ok(shelling_order(fam)?.is_some())
}

/// Whether `fam` has exactly one transversal.
pub fn has_unique_transversal(fam: &SetFamily) -> Result<bool> {
    Ok(count_transversals_up_to(fam, 2)? == 1)
}

/// Rebuilds a shelling order from a word that satisfies `f(t(F)) = |F|`.
///
/// Such a word makes `t(F)` the strict maximum of `w(F)` for every member, so the
/// member with the largest `w(t(F))` among those not yet placed can always go last.
/// That is the same as sorting members by `w(t(F))` ascending, ties by index.
pub fn shelling_order_from_witness(
    fam: &SetFamily,
    t: &Transversal,
    w: &SurjectiveWord,
) -> Result<ShellingOrder> {
    if fam.len() != fam.n() {
        return Err(Error::Hypothesis(format!(
            "family has {} members over [{}]; need exactly n members",
            fam.len(),
            fam.n()
        )));
    }
    fam.ensure_nonempty_members()?;
    t.validate(fam)?;
    let maximal = Configuration::maximal(fam);
    if !satisfies(w, fam, t, &maximal)? {
        return Err(Error::WitnessRejected);
    }
    let mut order: Vec<usize> = (0..fam.len()).collect();
    order.sort_by_key(|&i| (w.value(t.element(i)), i));
    let order = ShellingOrder(order);
    if !verify_shelling_order(fam, &order)? {
        unreachable!("witness order failed verification for {fam}");
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::all_transversals;
    use crate::shapes::{hook_family, SkewShape};

    fn fam(n: usize, members: &[&[usize]]) -> SetFamily {
        SetFamily::new(n, members.iter().map(|m| m.to_vec()).collect()).unwrap()
    }

    #[test]
    fn verify_examples() {
        let chain = fam(3, &[&[1], &[1, 2], &[1, 2, 3]]);
        let ord = |v: &[usize]| ShellingOrder::from_one_based(v).unwrap();
        assert_eq!(verify_shelling_order(&chain, &ord(&[1, 2, 3])), Ok(true));
        assert_eq!(verify_shelling_order(&chain, &ord(&[3, 2, 1])), Ok(false));
        assert_eq!(
            verify_shelling_order(&fam(1, &[&[1]]), &ord(&[1])),
            Ok(true)
        );
        assert!(verify_shelling_order(&chain, &ord(&[1, 1, 2])).is_err());
        assert!(verify_shelling_order(&chain, &ord(&[1, 2])).is_err());
        assert!(ShellingOrder::from_one_based(&[0]).is_err());
    }

    #[test]
    fn shelling_order_examples() {
        assert_eq!(shelling_order(&fam(2, &[&[1, 2], &[1, 2]])), Ok(None));
        assert!(shelling_order(&fam(1, &[&[1]])).unwrap().is_some());
        let (hooks, _) = hook_family(&SkewShape::normal(vec![3, 2, 1]).unwrap());
        let order = shelling_order(&hooks).unwrap().unwrap();
        assert!(verify_shelling_order(&hooks, &order).unwrap());
        assert!(shelling_order(&fam(2, &[&[1], &[]])).is_err());
    }

    #[test]
    fn shellable_examples_both_routes() {
        for (f, expected) in [
            (fam(2, &[&[1, 2], &[1, 2]]), false),
            (fam(3, &[&[1], &[1, 2], &[1, 2, 3]]), true),
            (fam(2, &[&[2], &[1, 2]]), true),
        ] {
            assert_eq!(is_shellable(&f), Ok(expected), "{f}");
            assert_eq!(has_unique_transversal(&f), Ok(expected), "{f}");
        }
        assert_eq!(
            all_transversals(&fam(2, &[&[2], &[1, 2]])).unwrap(),
            vec![Transversal::new(vec![2, 1])]
        );
    }

    #[test]
    fn fewer_members_than_elements() {
        let f = fam(3, &[&[2], &[1, 2]]);
        assert_eq!(is_shellable(&f), Ok(true));
        assert_eq!(has_unique_transversal(&f), Ok(true));
    }

    #[test]
    fn unique_elements() {
        assert!(unique_element_set(&fam(2, &[&[1, 2], &[1, 2]])).is_empty());
        assert_eq!(
            unique_element_set(&fam(2, &[&[1], &[2]])),
            BTreeSet::from([1, 2])
        );
        // duplicates of the same set are separate members
        assert!(unique_element_set(&fam(1, &[&[1], &[1]])).is_empty());
    }

    #[test]
    fn backtracking_needed_never_breaks_result() {
        // peeling {1,2} first is fine; a non-shellable family explores and fails
        let f = fam(4, &[&[1, 2], &[1, 2], &[3], &[3, 4]]);
        assert_eq!(shelling_order(&f), Ok(None));
        assert_eq!(shelling_order_exhaustive(&f), Ok(None));
    }

    #[test]
    fn witness_examples() {
        let single = fam(1, &[&[1]]);
        let w = SurjectiveWord::new(1, vec![1]).unwrap();
        let t = Transversal::new(vec![1]);
        assert_eq!(
            shelling_order_from_witness(&single, &t, &w)
                .unwrap()
                .to_one_based(),
            vec![1]
        );

        let chain = fam(3, &[&[1], &[1, 2], &[1, 2, 3]]);
        let t = Transversal::new(vec![1, 2, 3]);
        let id = SurjectiveWord::new(3, vec![1, 2, 3]).unwrap();
        assert_eq!(
            shelling_order_from_witness(&chain, &t, &id)
                .unwrap()
                .to_one_based(),
            vec![1, 2, 3]
        );
        let rev = SurjectiveWord::new(3, vec![3, 2, 1]).unwrap();
        assert_eq!(
            shelling_order_from_witness(&chain, &t, &rev),
            Err(Error::WitnessRejected)
        );
    }

    #[test]
    fn witness_on_hook_family_of_21() {
        let (hooks, t) = hook_family(&SkewShape::normal(vec![2, 1]).unwrap());
        let maximal = Configuration::maximal(&hooks);
        let mut found = 0;
        let mut perm: Vec<usize> = (1..=3).collect();
        loop {
            let w = SurjectiveWord::new(3, perm.clone()).unwrap();
            if satisfies(&w, &hooks, &t, &maximal).unwrap() {
                found += 1;
                let order = shelling_order_from_witness(&hooks, &t, &w).unwrap();
                assert!(verify_shelling_order(&hooks, &order).unwrap());
            }
            if !crate::perm::next_permutation(&mut perm) {
                break;
            }
        }
        assert!(found > 0);
    }
}
