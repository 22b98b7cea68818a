//! Configurations of a transversal and the surjective words that satisfy them.
//!
//! Fix a family `F` over `[n]` and a transversal `t`. A configuration assigns each
//! member `F` a rank demand `1 <= f(F) <= |F|`. A surjective word `w: [n] -> [m]`
//! satisfies `f` when, for every member, `w(t(F))` is the `f(F)`-th smallest value
//! of the *set* `w(F)`. Demands are stored per member, which is all the satisfaction
//! relation ever reads.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{check_bound, Error, Result};
use crate::family::{SetFamily, Transversal};
use crate::shelling::{is_shellable, unique_element_set};

/// Default bound on `n` for exhaustive word enumeration.
pub const WORD_ORACLE_BOUND: usize = 10;

/// Per-member rank demands, index-aligned with the family's members.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Configuration {
    demands: Vec<usize>,
}

impl Configuration {
    pub fn new(demands: Vec<usize>) -> Self {
        Configuration { demands }
    }

    /// Wraps and validates against `fam`.
    pub fn for_family(fam: &SetFamily, demands: Vec<usize>) -> Result<Self> {
        let f = Configuration { demands };
        f.validate(fam)?;
        Ok(f)
    }

    /// Every demand 1: words whose representative is the minimum of each member.
    pub fn minimal(fam: &SetFamily) -> Self {
        Configuration {
            demands: vec![1; fam.len()],
        }
    }

    /// Every demand `|F|`: the representative is the strict maximum of each member.
    pub fn maximal(fam: &SetFamily) -> Self {
        Configuration {
            demands: fam.members().iter().map(Vec::len).collect(),
        }
    }

    pub fn demands(&self) -> &[usize] {
        &self.demands
    }

    pub fn demand(&self, member: usize) -> usize {
        self.demands[member]
    }

    pub fn validate(&self, fam: &SetFamily) -> Result<()> {
        if self.demands.len() != fam.len() {
            return Err(Error::InvalidConfiguration(format!(
                "{} demands for {} members",
                self.demands.len(),
                fam.len()
            )));
        }
        for (i, &d) in self.demands.iter().enumerate() {
            if d == 0 || d > fam.member(i).len() {
                return Err(Error::InvalidConfiguration(format!(
                    "demand {d} for member {} is outside [1, {}]",
                    i + 1,
                    fam.member(i).len()
                )));
            }
        }
        Ok(())
    }
}

/// A surjective map `[n] -> [m]`, stored as its values in element order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "WordRepr")]
pub struct SurjectiveWord {
    m: usize,
    values: Vec<usize>,
}

#[derive(Deserialize)]
struct WordRepr {
    m: usize,
    values: Vec<usize>,
}

impl TryFrom<WordRepr> for SurjectiveWord {
    type Error = Error;

    fn try_from(repr: WordRepr) -> Result<Self> {
        SurjectiveWord::new(repr.m, repr.values)
    }
}

impl SurjectiveWord {
    /// Checks `1 <= values[i] <= m` and that every value of `[m]` occurs.
    pub fn new(m: usize, values: Vec<usize>) -> Result<Self> {
        if m == 0 || values.is_empty() {
            return Err(Error::InvalidWord("need n >= 1 and m >= 1".into()));
        }
        let mut hit = vec![false; m + 1];
        for &v in &values {
            if v == 0 || v > m {
                return Err(Error::InvalidWord(format!("value {v} outside [1, {m}]")));
            }
            hit[v] = true;
        }
        if let Some(missing) = (1..=m).find(|&v| !hit[v]) {
            return Err(Error::InvalidWord(format!(
                "value {missing} is never attained"
            )));
        }
        Ok(SurjectiveWord { m, values })
    }

    /// Uses `max(values)` as `m`.
    pub fn from_values(values: Vec<usize>) -> Result<Self> {
        let m = values.iter().copied().max().unwrap_or(0);
        Self::new(m, values)
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Value at 1-based element `e`.
    pub fn value(&self, e: usize) -> usize {
        self.values[e - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `w'(i) = m - w(i) + 1`.
    pub fn reversed(&self) -> SurjectiveWord {
        SurjectiveWord {
            m: self.m,
            values: self.values.iter().map(|&v| self.m + 1 - v).collect(),
        }
    }
}

/// Rank of `w(t(F))` in the set `w(F)`, 1-based. `values[e - 1]` is `w(e)`.
fn rank_in_member(values: &[usize], member: &[usize], rep: usize) -> usize {
    let target = values[rep - 1];
    let mut below: Vec<usize> = member
        .iter()
        .map(|&e| values[e - 1])
        .filter(|&v| v < target)
        .collect();
    below.sort_unstable();
    below.dedup();
    below.len() + 1
}

fn check_dimensions(w: &SurjectiveWord, fam: &SetFamily, t: &Transversal) -> Result<()> {
    if w.n() != fam.n() {
        return Err(Error::DimensionMismatch(format!(
            "word has length {}, family is over [{}]",
            w.n(),
            fam.n()
        )));
    }
    if t.len() != fam.len() {
        return Err(Error::DimensionMismatch(format!(
            "transversal covers {} members, family has {}",
            t.len(),
            fam.len()
        )));
    }
    Ok(())
}

/// Whether `w` satisfies `f` with respect to `(fam, t)`.
pub fn satisfies(
    w: &SurjectiveWord,
    fam: &SetFamily,
    t: &Transversal,
    f: &Configuration,
) -> Result<bool> {
    check_dimensions(w, fam, t)?;
    if f.demands().len() != fam.len() {
        return Err(Error::DimensionMismatch(format!(
            "configuration has {} demands, family has {} members",
            f.demands().len(),
            fam.len()
        )));
    }
    Ok((0..fam.len())
        .all(|i| rank_in_member(w.values(), fam.member(i), t.element(i)) == f.demand(i)))
}

/// The one configuration `w` satisfies: each demand is the rank of `w(t(F))` in `w(F)`.
pub fn configuration_of(
    w: &SurjectiveWord,
    fam: &SetFamily,
    t: &Transversal,
) -> Result<Configuration> {
    check_dimensions(w, fam, t)?;
    t.validate(fam)?;
    Ok(Configuration::new(
        (0..fam.len())
            .map(|i| rank_in_member(w.values(), fam.member(i), t.element(i)))
            .collect(),
    ))
}

/// Lexicographic stream of every configuration of `t` (last member varies fastest).
pub fn enumerate_configurations(fam: &SetFamily, t: &Transversal) -> Result<ConfigurationIter> {
    fam.ensure_nonempty_members()?;
    t.validate(fam)?;
    Ok(ConfigurationIter {
        limits: fam.members().iter().map(Vec::len).collect(),
        next: Some(vec![1; fam.len()]),
    })
}

/// Iterator returned by [`enumerate_configurations`].
#[derive(Clone, Debug)]
pub struct ConfigurationIter {
    limits: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl Iterator for ConfigurationIter {
    type Item = Configuration;

    fn next(&mut self) -> Option<Configuration> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.len();
        while pos > 0 {
            pos -= 1;
            if succ[pos] < self.limits[pos] {
                succ[pos] += 1;
                self.next = Some(succ);
                break;
            }
            succ[pos] = 1;
        }
        Some(Configuration::new(current))
    }
}

/// Calls `visit` on every surjection `[n] -> [m]` in lexicographic order of the
/// value vector. Branches that can no longer cover `[m]` are cut.
pub fn for_each_surjection<F>(n: usize, m: usize, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn go<F: FnMut(&[usize]) -> ControlFlow<()>>(
        n: usize,
        m: usize,
        values: &mut Vec<usize>,
        hits: &mut [usize],
        uncovered: usize,
        visit: &mut F,
    ) -> ControlFlow<()> {
        if values.len() == n {
            return visit(values);
        }
        let left = n - values.len();
        for v in 1..=m {
            let newly = hits[v] == 0;
            let still = uncovered - usize::from(newly);
            if still > left - 1 {
                continue;
            }
            hits[v] += 1;
            values.push(v);
            let flow = go(n, m, values, hits, still, visit);
            values.pop();
            hits[v] -= 1;
            flow?;
        }
        ControlFlow::Continue(())
    }
    if m == 0 || m > n {
        return;
    }
    let mut hits = vec![0; m + 1];
    let _ = go(n, m, &mut Vec::with_capacity(n), &mut hits, m, &mut visit).is_break();
}

/// All surjections `[n] -> [m]`, for small `n`.
pub fn surjections(n: usize, m: usize) -> Vec<SurjectiveWord> {
    let mut out = Vec::new();
    for_each_surjection(n, m, |v| {
        out.push(SurjectiveWord {
            m,
            values: v.to_vec(),
        });
        ControlFlow::Continue(())
    });
    out
}

/// Depth-first search over words that assigns elements in ascending order and checks
/// each member as soon as its largest element is assigned.
struct WordSearch<'a> {
    fam: &'a SetFamily,
    t: &'a Transversal,
    f: &'a Configuration,
    n: usize,
    m: usize,
    /// members whose largest element is `e`, indexed by `e`
    completes_at: Vec<Vec<usize>>,
    values: Vec<usize>,
    hits: Vec<usize>,
}

impl<'a> WordSearch<'a> {
    fn new(fam: &'a SetFamily, t: &'a Transversal, f: &'a Configuration, m: usize) -> Self {
        let n = fam.n();
        let mut completes_at = vec![Vec::new(); n + 1];
        for (i, member) in fam.members().iter().enumerate() {
            if let Some(&last) = member.last() {
                completes_at[last].push(i);
            }
        }
        WordSearch {
            fam,
            t,
            f,
            n,
            m,
            completes_at,
            values: Vec::with_capacity(n),
            hits: vec![0; m + 1],
        }
    }

    fn run<V: FnMut(&[usize]) -> ControlFlow<()>>(
        &mut self,
        uncovered: usize,
        visit: &mut V,
    ) -> ControlFlow<()> {
        let placed = self.values.len();
        if placed == self.n {
            return visit(&self.values);
        }
        let left = self.n - placed;
        let e = placed + 1;
        for v in 1..=self.m {
            let newly = self.hits[v] == 0;
            let still = uncovered - usize::from(newly);
            if still > left - 1 {
                continue;
            }
            self.values.push(v);
            let ok = self.completes_at[e].iter().all(|&i| {
                rank_in_member(&self.values, self.fam.member(i), self.t.element(i))
                    == self.f.demand(i)
            });
            if ok {
                self.hits[v] += 1;
                let flow = self.run(still, visit);
                self.hits[v] -= 1;
                if flow.is_break() {
                    self.values.pop();
                    return flow;
                }
            }
            self.values.pop();
        }
        ControlFlow::Continue(())
    }
}

fn check_word_inputs(fam: &SetFamily, t: &Transversal, f: &Configuration, m: usize) -> Result<()> {
    fam.ensure_nonempty_members()?;
    t.validate(fam)?;
    f.validate(fam)?;
    if m == 0 || m > fam.n() {
        return Err(Error::Hypothesis(format!(
            "need 1 <= m <= n, got m = {m}, n = {}",
            fam.n()
        )));
    }
    Ok(())
}

/// `A_{n,m}(f)`: the number of surjections `[n] -> [m]` satisfying `f`, counted
/// exhaustively.
pub fn count_satisfying(
    fam: &SetFamily,
    t: &Transversal,
    f: &Configuration,
    m: usize,
) -> Result<u64> {
    count_satisfying_bounded(fam, t, f, m, WORD_ORACLE_BOUND)
}

pub fn count_satisfying_bounded(
    fam: &SetFamily,
    t: &Transversal,
    f: &Configuration,
    m: usize,
    bound: usize,
) -> Result<u64> {
    check_word_inputs(fam, t, f, m)?;
    check_bound("n", fam.n(), bound)?;
    let mut count = 0u64;
    let _ = WordSearch::new(fam, t, f, m)
        .run(m, &mut |_| {
            count += 1;
            ControlFlow::Continue(())
        })
        .is_break();
    Ok(count)
}

/// First satisfying word in lexicographic order, by backtracking.
pub fn search_word(
    fam: &SetFamily,
    t: &Transversal,
    f: &Configuration,
    m: usize,
) -> Result<Option<SurjectiveWord>> {
    check_word_inputs(fam, t, f, m)?;
    let mut found = None;
    let _ = WordSearch::new(fam, t, f, m)
        .run(m, &mut |v| {
            found = Some(v.to_vec());
            ControlFlow::Break(())
        })
        .is_break();
    Ok(found.map(|values| SurjectiveWord { m, values }))
}

/// `(min(n, n - |S| + 1), n)` where `S` is the set of elements in exactly one member.
pub fn m_range(fam: &SetFamily) -> Result<(usize, usize)> {
    require_square(fam)?;
    let n = fam.n();
    let s = unique_element_set(fam).len();
    Ok((n.min(n + 1 - s), n))
}

pub(crate) fn require_square(fam: &SetFamily) -> Result<()> {
    if fam.len() != fam.n() {
        return Err(Error::Hypothesis(format!(
            "family has {} members over [{}]; need exactly n members",
            fam.len(),
            fam.n()
        )));
    }
    Ok(())
}

/// Finds a surjection `[n] -> [m]` satisfying `f`.
///
/// For a shellable family the word is built directly by peeling off the members
/// that own the unique elements and recursing on the rest; it always exists when
/// `m` is in [`m_range`]. Other families fall back to [`search_word`] and may have
/// no solution.
pub fn solve(
    fam: &SetFamily,
    t: &Transversal,
    f: &Configuration,
    m: usize,
) -> Result<Option<SurjectiveWord>> {
    require_square(fam)?;
    fam.ensure_nonempty_members()?;
    t.validate(fam)?;
    f.validate(fam)?;
    let (lower, upper) = m_range(fam)?;
    if m < lower || m > upper {
        return Err(Error::MOutOfRange { m, lower, upper });
    }
    if !is_shellable(fam)? {
        return search_word(fam, t, f, m);
    }
    let values = construct_word(fam, t.as_slice(), f.demands(), m);
    let w = SurjectiveWord::new(m, values).expect("constructed word is surjective");
    debug_assert!(satisfies(&w, fam, t, f).unwrap());
    Ok(Some(w))
}

/// Sorted values of `word` over `member` without `skip`.
fn sorted_values_without(word: &[usize], member: &[usize], skip: usize) -> Vec<usize> {
    let mut vals: Vec<usize> = member
        .iter()
        .filter(|&&e| e != skip)
        .map(|&e| word[e])
        .collect();
    vals.sort_unstable();
    vals
}

/// The constructive step for a shellable family with `|F| = n` and `m` in range.
///
/// `t` maps member -> element, `demands` is per member. Returns `w(1..=n)`.
fn construct_word(fam: &SetFamily, t: &[usize], demands: &[usize], m: usize) -> Vec<usize> {
    let n = fam.n();
    if m == 1 {
        // every element is unique, so every member is a singleton with demand 1
        return vec![1; n];
    }
    let unique = unique_element_set(fam);
    // the n - m + 1 largest unique elements leave; their owners form the outer block
    let removed: Vec<usize> = unique.iter().rev().take(n - m + 1).copied().collect();
    debug_assert_eq!(removed.len(), n - m + 1, "m below the admissible range");
    let mut is_removed = vec![false; n + 1];
    for &r in &removed {
        is_removed[r] = true;
    }
    let owner: Vec<usize> = {
        let mut inv = vec![usize::MAX; n + 1];
        for (i, &e) in t.iter().enumerate() {
            inv[e] = i;
        }
        inv
    };

    // Relabel kept elements to 1..=m-1 in ascending order and reindex inner members.
    let mut new_label = vec![0; n + 1];
    let mut kept = Vec::with_capacity(m - 1);
    for e in 1..=n {
        if !is_removed[e] {
            kept.push(e);
            new_label[e] = kept.len();
        }
    }
    let inner: Vec<usize> = (0..fam.len()).filter(|&i| !is_removed[t[i]]).collect();
    let inner_members: Vec<Vec<usize>> = inner
        .iter()
        .map(|&i| {
            fam.member(i)
                .iter()
                .map(|&e| {
                    debug_assert!(!is_removed[e], "inner member meets a removed element");
                    new_label[e]
                })
                .collect()
        })
        .collect();
    let inner_fam = SetFamily::new(m - 1, inner_members).expect("relabeled inner family");
    let inner_t: Vec<usize> = inner.iter().map(|&i| new_label[t[i]]).collect();
    let inner_f: Vec<usize> = inner.iter().map(|&i| demands[i]).collect();
    let inner_word = construct_word(&inner_fam, &inner_t, &inner_f, m - 1);

    // word[e] for e in [n]; slot 0 unused
    let mut word = vec![0; n + 1];
    for &e in &kept {
        word[e] = inner_word[new_label[e] - 1];
    }

    let outer: Vec<usize> = removed.iter().rev().map(|&r| owner[r]).collect();
    let saturated = outer.iter().any(|&i| demands[i] == fam.member(i).len());
    if saturated {
        for &i in &outer {
            let r = t[i];
            word[r] = if demands[i] == fam.member(i).len() {
                m
            } else {
                sorted_values_without(&word, fam.member(i), r)[demands[i] - 1]
            };
        }
    } else {
        // Open a gap at `skipped` with exactly demand-1 values of the designated
        // member below it, shift the inner values over it, and give it to that member.
        let designated = owner[removed[0]];
        let r_star = t[designated];
        let below = sorted_values_without(&word, fam.member(designated), r_star);
        let k = demands[designated];
        let skipped = if k == 1 { 1 } else { below[k - 2] + 1 };
        for &e in &kept {
            if word[e] >= skipped {
                word[e] += 1;
            }
        }
        word[r_star] = skipped;
        for &i in outer.iter().filter(|&&i| i != designated) {
            let r = t[i];
            word[r] = sorted_values_without(&word, fam.member(i), r)[demands[i] - 1];
        }
    }
    word.remove(0);
    word
}
