//! Finite families of subsets of `[n]`, Hall's marriage condition and transversals.
//!
//! A family is a multiset: members are identified by their position, so two equal
//! subsets at different positions are distinct members. Elements are 1-based.
//! Member indices are 0-based in the Rust API and 1-based in JSON and error messages.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_bound, Error, Result};

/// Default member-count bound for exhaustive transversal enumeration.
pub const TRANSVERSAL_ORACLE_BOUND: usize = 10;

/// Member-count bound for the subfamily-enumeration form of the marriage condition.
pub const SUBFAMILY_ORACLE_BOUND: usize = 24;

/// An indexed family of subsets of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FamilyRepr", into = "FamilyRepr")]
pub struct SetFamily {
    n: usize,
    members: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct FamilyRepr {
    n: usize,
    members: Vec<Vec<usize>>,
}

impl TryFrom<FamilyRepr> for SetFamily {
    type Error = Error;

    fn try_from(repr: FamilyRepr) -> Result<Self> {
        SetFamily::new(repr.n, repr.members)
    }
}

impl From<SetFamily> for FamilyRepr {
    fn from(fam: SetFamily) -> Self {
        FamilyRepr {
            n: fam.n,
            members: fam.members,
        }
    }
}

impl SetFamily {
    /// Builds a family over `[n]`. Members are sorted; an element repeated inside a
    /// member or lying outside `[n]` is rejected. Empty members are allowed here.
    pub fn new(n: usize, members: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidFamily(
                "ground set size n must be positive".into(),
            ));
        }
        let mut sorted = Vec::with_capacity(members.len());
        for (i, mut member) in members.into_iter().enumerate() {
            member.sort_unstable();
            if let Some(&e) = member.iter().find(|&&e| e == 0 || e > n) {
                return Err(Error::InvalidFamily(format!(
                    "member {} contains {e}, which is not in [1, {n}]",
                    i + 1
                )));
            }
            if member.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidFamily(format!(
                    "member {} repeats an element",
                    i + 1
                )));
            }
            sorted.push(member);
        }
        Ok(SetFamily { n, members: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub fn member(&self, index: usize) -> &[usize] {
        &self.members[index]
    }

    /// Number of members, counted with multiplicity.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, index: usize, element: usize) -> bool {
        self.members[index].binary_search(&element).is_ok()
    }

    /// Fails with [`Error::EmptyMember`] on the first empty member.
    pub fn ensure_nonempty_members(&self) -> Result<()> {
        match self.members.iter().position(|m| m.is_empty()) {
            Some(i) => Err(Error::EmptyMember { index: i + 1 }),
            None => Ok(()),
        }
    }

    /// Size of the union of the members at `indices`.
    pub fn union_size<I: IntoIterator<Item = usize>>(&self, indices: I) -> usize {
        let mut seen = vec![false; self.n + 1];
        let mut count = 0;
        for i in indices {
            for &e in &self.members[i] {
                if !seen[e] {
                    seen[e] = true;
                    count += 1;
                }
            }
        }
        count
    }

    /// How many members contain each element; index 0 is unused.
    pub fn element_multiplicities(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n + 1];
        for member in &self.members {
            for &e in member {
                counts[e] += 1;
            }
        }
        counts
    }

    /// Applies an element relabeling (`relabel[e]` is the new name of `e`, index 0
    /// unused) and a member reordering (new member `k` is old member `order[k]`).
    pub fn relabeled(&self, relabel: &[usize], order: &[usize]) -> Result<SetFamily> {
        let members = order
            .iter()
            .map(|&i| self.members[i].iter().map(|&e| relabel[e]).collect())
            .collect();
        SetFamily::new(self.n, members)
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]: {{", self.n)?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{")?;
            for (j, e) in m.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// A system of distinct representatives: `element(i)` is the representative of
/// member `i`. Serialized as the list of representatives in member order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Transversal(Vec<usize>);

impl Transversal {
    /// Wraps an assignment without checking it against a family.
    pub fn new(assignment: Vec<usize>) -> Self {
        Transversal(assignment)
    }

    /// Wraps and validates against `fam`.
    pub fn for_family(fam: &SetFamily, assignment: Vec<usize>) -> Result<Self> {
        let t = Transversal(assignment);
        t.validate(fam)?;
        Ok(t)
    }

    pub fn element(&self, member: usize) -> usize {
        self.0[member]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks injectivity and `t(F) ∈ F` for every member.
    pub fn validate(&self, fam: &SetFamily) -> Result<()> {
        if self.0.len() != fam.len() {
            return Err(Error::InvalidTransversal(format!(
                "assigns {} members, family has {}",
                self.0.len(),
                fam.len()
            )));
        }
        let mut used = vec![false; fam.n() + 1];
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 || e > fam.n() || !fam.contains(i, e) {
                return Err(Error::InvalidTransversal(format!(
                    "element {e} is not in member {}",
                    i + 1
                )));
            }
            if std::mem::replace(&mut used[e], true) {
                return Err(Error::InvalidTransversal(format!(
                    "element {e} is assigned twice"
                )));
            }
        }
        Ok(())
    }

    /// Member owning each element (`None` for elements off the image); index 0 unused.
    pub fn inverse(&self, n: usize) -> Vec<Option<usize>> {
        let mut inv = vec![None; n + 1];
        for (i, &e) in self.0.iter().enumerate() {
            inv[e] = Some(i);
        }
        inv
    }
}

/// Maximum matching of members to elements by augmenting paths (Kuhn).
///
/// Members are processed in ascending index order. Each search first takes the
/// smallest free element of the member, then tries re-routing through elements in
/// ascending order, so the result is deterministic.
pub fn maximum_matching(fam: &SetFamily) -> Vec<Option<usize>> {
    fn augment(
        fam: &SetFamily,
        member: usize,
        visited: &mut [bool],
        owner: &mut [Option<usize>],
        assigned: &mut [Option<usize>],
    ) -> bool {
        if let Some(&e) = fam.member(member).iter().find(|&&e| owner[e].is_none()) {
            owner[e] = Some(member);
            assigned[member] = Some(e);
            return true;
        }
        for &e in fam.member(member) {
            if visited[e] {
                continue;
            }
            visited[e] = true;
            let free = match owner[e] {
                None => true,
                Some(other) => augment(fam, other, visited, owner, assigned),
            };
            if free {
                owner[e] = Some(member);
                assigned[member] = Some(e);
                return true;
            }
        }
        false
    }

    let mut owner = vec![None; fam.n() + 1];
    let mut assigned = vec![None; fam.len()];
    let mut visited = vec![false; fam.n() + 1];
    for member in 0..fam.len() {
        visited.iter_mut().for_each(|v| *v = false);
        augment(fam, member, &mut visited, &mut owner, &mut assigned);
    }
    assigned
}

/// Hall's marriage condition, decided by maximum matching: it holds iff the matching
/// saturates every member. An empty member makes it false.
pub fn satisfies_marriage_condition(fam: &SetFamily) -> bool {
    maximum_matching(fam).iter().all(Option::is_some)
}

/// Hall's marriage condition checked literally over every subfamily:
/// `|F'| <= |∪ F'|` for all subsets of member indices.
pub fn marriage_condition_by_subfamilies(fam: &SetFamily) -> Result<bool> {
    check_bound("member count", fam.len(), SUBFAMILY_ORACLE_BOUND)?;
    if fam.n() <= 64 {
        let masks: Vec<u64> = fam
            .members()
            .iter()
            .map(|m| m.iter().fold(0u64, |acc, &e| acc | 1 << (e - 1)))
            .collect();
        for subset in 1u64..(1u64 << fam.len()) {
            let union = (0..fam.len())
                .filter(|i| subset >> i & 1 == 1)
                .fold(0u64, |acc, i| acc | masks[i]);
            if subset.count_ones() > union.count_ones() {
                return Ok(false);
            }
        }
    } else {
        for subset in 1u64..(1u64 << fam.len()) {
            let chosen: Vec<usize> = (0..fam.len()).filter(|i| subset >> i & 1 == 1).collect();
            if chosen.len() > fam.union_size(chosen.iter().copied()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Some transversal of `fam`, or `None` when the marriage condition fails.
pub fn find_transversal(fam: &SetFamily) -> Result<Option<Transversal>> {
    fam.ensure_nonempty_members()?;
    let matching = maximum_matching(fam);
    Ok(matching
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .map(Transversal))
}

/// Every transversal, in lexicographic order of the assignment vector.
pub fn all_transversals(fam: &SetFamily) -> Result<Vec<Transversal>> {
    all_transversals_bounded(fam, TRANSVERSAL_ORACLE_BOUND)
}

pub fn all_transversals_bounded(fam: &SetFamily, bound: usize) -> Result<Vec<Transversal>> {
    fam.ensure_nonempty_members()?;
    check_bound("member count", fam.len(), bound)?;
    let mut out = Vec::new();
    visit_transversals(fam, &mut |t| {
        out.push(Transversal(t.to_vec()));
        true
    });
    Ok(out)
}

/// Counts transversals, stopping once `limit` have been seen.
pub fn count_transversals_up_to(fam: &SetFamily, limit: usize) -> Result<usize> {
    fam.ensure_nonempty_members()?;
    let mut count = 0;
    visit_transversals(fam, &mut |_| {
        count += 1;
        count < limit
    });
    Ok(count)
}

/// Depth-first enumeration; the visitor returns `false` to stop.
fn visit_transversals(fam: &SetFamily, visit: &mut dyn FnMut(&[usize]) -> bool) {
    fn go(
        fam: &SetFamily,
        member: usize,
        used: &mut [bool],
        current: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if member == fam.len() {
            return visit(current);
        }
        for &e in fam.member(member) {
            if used[e] {
                continue;
            }
            used[e] = true;
            current.push(e);
            let keep_going = go(fam, member + 1, used, current, visit);
            current.pop();
            used[e] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }
    let mut used = vec![false; fam.n() + 1];
    go(fam, 0, &mut used, &mut Vec::with_capacity(fam.len()), visit);
}
