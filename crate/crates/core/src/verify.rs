//! Named property suites, each checking one invariant against a brute-force oracle.
//!
//! A suite runs over seeded random instances plus exhaustive small ones, all sized
//! by a single `bound`. Suites never stop at the first failure; they report how
//! many instances were checked and describe the first few that failed.

use std::collections::{HashMap, HashSet};
use std::ops::ControlFlow;

use num_bigint::BigUint;
use serde::Serialize;

use crate::config::{
    configuration_of, count_satisfying_bounded, enumerate_configurations, for_each_surjection,
    m_range, satisfies, solve, surjections, Configuration, SurjectiveWord,
};
use crate::counting::{
    average_closed_form, average_formula, configuration_counts, stirling2, stirling2_explicit,
    surjection_count, ExactRational,
};
use crate::error::{check_bound, Error, Result};
use crate::family::{
    all_transversals_bounded, find_transversal, marriage_condition_by_subfamilies,
    satisfies_marriage_condition, SetFamily, Transversal,
};
use crate::random::{
    all_families, identity_transversal, random_family, random_shellable_family,
    random_square_family, rng, triangular_families, DEFAULT_SEED,
};
use crate::shapes::{
    balanced_configuration, count_balanced, count_standard, hook_family, hook_length_formula,
    skew_shapes, SkewShape,
};
use crate::shelling::{
    is_shellable, shelling_order, shelling_order_exhaustive, shelling_order_from_witness,
    unique_element_set, verify_shelling_order,
};

/// Largest `n` for which every triangular family is included.
pub const TRIANGULAR_LIMIT: usize = 5;

const KEPT_FAILURES: usize = 10;

/// `(id, default bound, largest accepted bound, description)` for every suite.
pub const SUITES: &[(&str, usize, usize, &str)] = &[
    (
        "hall",
        6,
        8,
        "marriage condition by matching = by subfamilies = a transversal exists",
    ),
    (
        "unique-transversal",
        7,
        7,
        "shellable iff exactly one transversal",
    ),
    (
        "not-empty",
        6,
        9,
        "shellable families with |F| = n have a unique element",
    ),
    (
        "greedy",
        6,
        6,
        "greedy peeling finds an order iff exhaustive search does",
    ),
    (
        "witness",
        5,
        6,
        "orders rebuilt from f1-witnesses are shelling orders",
    ),
    (
        "good-marriage",
        5,
        6,
        "shellable: every configuration is satisfiable and solve succeeds",
    ),
    ("converse", 5, 6, "non-shellable: f1 has no satisfying word"),
    (
        "partition",
        5,
        6,
        "counts over all configurations sum to m! S(n, m)",
    ),
    (
        "duality",
        5,
        6,
        "w satisfies f0 iff the reversed word satisfies f1",
    ),
    (
        "tail-bound",
        5,
        5,
        "#{f : A <= k avg} >= (1 - 1/k) prod |F|",
    ),
    (
        "closed-form",
        6,
        12,
        "closed forms agree with m! S(n, m) / prod |F|",
    ),
    (
        "stirling",
        25,
        200,
        "recurrence = alternating sum; m! S(n, m) = surjection count",
    ),
    (
        "tableaux",
        7,
        8,
        "hook families, standard, balanced and hook-length counts",
    ),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteParams {
    pub bound: usize,
    pub seed: u64,
    /// Number of random instances drawn on top of the exhaustive ones.
    pub samples: usize,
}

impl SuiteParams {
    pub fn new(bound: usize, seed: u64, samples: usize) -> Self {
        SuiteParams {
            bound,
            seed,
            samples,
        }
    }

    /// The suite's default bound, the default seed and 200 samples.
    pub fn defaults(suite: &str) -> Result<Self> {
        let (_, bound, _, _) = lookup(suite)?;
        Ok(SuiteParams::new(bound, DEFAULT_SEED, 200))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub bound: usize,
    pub seed: u64,
    pub samples: usize,
    pub instances: u64,
    pub failures: u64,
    /// Descriptions of the first few failing instances.
    pub examples: Vec<String>,
    pub passed: bool,
}

fn lookup(suite: &str) -> Result<(&'static str, usize, usize, &'static str)> {
    SUITES
        .iter()
        .copied()
        .find(|s| s.0 == suite)
        .ok_or_else(|| Error::UnknownSuite(suite.to_string()))
}

#[derive(Default)]
struct Tally {
    instances: u64,
    failures: u64,
    examples: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < KEPT_FAILURES {
                self.examples.push(describe());
            }
        }
    }
}

/// Runs the suite named `suite`.
///
/// Fails with [`Error::UnknownSuite`] for an unknown id and with
/// [`Error::OracleLimit`] when `bound` exceeds what the suite's oracle handles.
pub fn run(suite: &str, params: &SuiteParams) -> Result<SuiteReport> {
    let (id, _, max_bound, _) = lookup(suite)?;
    check_bound("bound", params.bound, max_bound)?;
    let p = params;
    let mut tally = Tally::default();
    match id {
        "hall" => hall(p, &mut tally)?,
        "unique-transversal" => unique_transversal(p, &mut tally)?,
        "not-empty" => not_empty(p, &mut tally)?,
        "greedy" => greedy(p, &mut tally)?,
        "witness" => witness(p, &mut tally)?,
        "good-marriage" => good_marriage(p, &mut tally)?,
        "converse" => converse(p, &mut tally)?,
        "partition" => partition(p, &mut tally)?,
        "duality" => duality(p, &mut tally)?,
        "tail-bound" => tail_bound(p, &mut tally)?,
        "closed-form" => closed_form(p, &mut tally)?,
        "stirling" => stirling(p, &mut tally)?,
        "tableaux" => tableaux(p, &mut tally)?,
        _ => unreachable!("suite table and dispatch disagree on {id}"),
    }
    Ok(SuiteReport {
        suite: id.to_string(),
        bound: params.bound,
        seed: params.seed,
        samples: params.samples,
        instances: tally.instances,
        failures: tally.failures,
        passed: tally.failures == 0,
        examples: tally.examples,
    })
}

/// Every triangular family with `n <= min(bound, TRIANGULAR_LIMIT)` (identity
/// transversal), then `samples` relabeled random ones with `n <= bound`.
pub fn shellable_instances(
    bound: usize,
    seed: u64,
    samples: usize,
) -> Vec<(SetFamily, Transversal)> {
    let mut out: Vec<_> = (1..=bound.min(TRIANGULAR_LIMIT))
        .flat_map(|n| triangular_families(n).map(move |f| (f, identity_transversal(n))))
        .collect();
    let mut r = rng(seed);
    for i in 0..samples {
        let n = 1 + i % bound.max(1);
        out.push(random_shellable_family(&mut r, n));
    }
    out
}

/// Families with `|F| = n <= bound` that have a transversal but are not shellable:
/// all of them for `n <= 3`, then random ones.
pub fn non_shellable_instances(
    bound: usize,
    seed: u64,
    samples: usize,
) -> Result<Vec<(SetFamily, Transversal)>> {
    let mut out = Vec::new();
    let keep = |fam: SetFamily, out: &mut Vec<_>| -> Result<()> {
        if !is_shellable(&fam)? {
            if let Some(t) = find_transversal(&fam)? {
                out.push((fam, t));
            }
        }
        Ok(())
    };
    for n in 1..=bound.min(3) {
        for fam in all_families(n, n) {
            keep(fam, &mut out)?;
        }
    }
    let mut r = rng(seed);
    let mut drawn = 0;
    let mut attempts = 0;
    while drawn < samples && attempts < 50 * samples.max(1) && bound >= 2 {
        attempts += 1;
        let n = 2 + attempts % (bound - 1);
        let before = out.len();
        keep(random_square_family(&mut r, n), &mut out)?;
        drawn += out.len() - before;
    }
    Ok(out)
}

/// Random families with `n, |F| <= bound`, plus every family with `n, |F| <= 2`.
fn mixed_families(bound: usize, seed: u64, samples: usize) -> Vec<SetFamily> {
    let small = bound.min(2);
    let mut out: Vec<SetFamily> = (1..=small)
        .flat_map(|n| (1..=small).flat_map(move |k| all_families(n, k)))
        .collect();
    let mut r = rng(seed);
    for i in 0..samples {
        let n = 1 + i % bound.max(1);
        let members = 1 + (i / bound.max(1)) % bound.max(1);
        out.push(random_family(&mut r, n, members));
    }
    out
}

/// Distinct hook families of skew shapes with at most `cells` cells.
pub fn hook_instances(cells: usize) -> Vec<(SkewShape, SetFamily, Transversal)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for shape in skew_shapes(cells + 2, cells) {
        let (fam, t) = hook_family(&shape);
        if seen.insert(fam.clone()) {
            out.push((shape, fam, t));
        }
    }
    out
}

fn hall(p: &SuiteParams, tally: &mut Tally) -> Result<()> {
    let mut fams = mixed_families(p.bound, p.seed, p.samples);
    if p.bound >= 3 {
        fams.extend(all_families(3, 3));
    }
    for fam in fams {
        let matching = satisfies_marriage_condition(&fam);
        let subfamilies = marriage_condition_by_subfamilies(&fam)?;
        let exists = !all_transversals_bounded(&fam, p.bound.max(3))?.is_empty();
        let found = find_transversal(&fam)?;
        let valid = found.as_ref().is_none_or(|t| t.validate(&fam).is_ok());
        tally.check(
            matching == subfamilies && matching == exists && found.is_some() == exists && valid,
            || {
                format!(
                    "{fam}: matching {matching}, subfamilies {subfamilies}, transversal {exists}"
                )
            },
        );
    }
    Ok(())
}

fn unique_transversal(p: &SuiteParams, tally: &mut Tally) -> Result<()> {
    let mut fams = mixed_families(p.bound, p.seed, p.samples);
    let shellable = shellable_instances(p.bound, p.seed ^ 1, p.samples / 4);
    fams.extend(shellable.into_iter().map(|(f, _)| f));
    for fam in fams {
        let shellable = is_shellable(&fam)?;
        let count = all_transversals_bounded(&fam, p.bound)?.len();
        tally.check(shellable == (count == 1), || {
            format!("{fam}: shellable {shellable}, {count} transversals")
        });
    }
    Ok(())
}

fn not_empty(p: &SuiteParams, tally: &mut Tally) -> Result<()> {
    for (fam, _) in shellable_instances(p.bound, p.seed, p.samples) {
        let s = unique_element_set(&fam);
        tally.check(!s.is_empty(), || format!("{fam}: no unique element"));
    }
    Ok(())
}

fn greedy(p: &SuiteParams, tally: &mut Tally) -> Result<()> {
    let mut fams = mixed_families(p.bound, p.seed, p.samples);
    let shellable = shellable_instances(p.bound, p.seed ^ 1, p.samples / 4);
    fams.extend(shellable.into_iter().map(|(f, _)| f));
    for fam in fams {
        let greedy = shelling_order(&fam)?;
        let exhaustive = shelling_order_exhaustive(&fam)?;
        let verified = match &greedy {
            Some(order) => verify_shelling_order(&fam, order)?,
            None => true,
        };
        tally.check(greedy.is_some() == exhaustive.is_some() && verified, || {
            format!("{fam}: greedy {greedy:?}, exhaustive {exhaustive:?}")
        });
    }
    Ok(())
}

fn permutations(n: usize) -> Vec<SurjectiveWord> {
    surjections(n, n)
}

fn witness(p: &SuiteParams, tally: &mut Tally) -> Result<()> {
    for (fam, t) in shellable_instances(p.bound, p.seed, p.samples) {
        let f1 = Configuration::maximal(&fam);
        let mut witnesses = 0;
        for w in permutations(fam.n()) {
            if !satisfies(&w, &fam, &t, &f1)? {
                continue;
            }
            witnesses += 1;
            let order = shelling_order_from_witness(&fam, &t, &w)?;
            let ok = verify_shelling_order(&fam, &order)?;
            tally.check(ok, || {
                format!("{fam}: witness {:?} gave {order:?}", w.values())
            });
        }
        tally.check(witnesses > 0, || format!("{fam}: no f1-witness"));
    }
    Ok(())
}

/// Every configuration at every admissible `m` has a satisfying word and `solve`
/// returns one that checks out.
pub fn check_good_marriage(
    fam: &SetFamily,
    t: &Transversal,
    mut record: impl FnMut(bool, String),
) -> Result<()> {
    let (lower, upper) = m_range(fam)?;
    for m in lower..=upper {
        for f in enumerate_configurations(fam, t)? {
            let count = count_satisfying_bounded(fam, t, &f, m, fam.n())?;
            let solved = match solve(fam, t, &f, m)? {
                Some(w) => satisfies(&w, fam, t, &f)?,
                None => false,
            };
            record(
                count >= 1 && solved,
                format!(
                    "{fam}, m = {m}, f = {:?}: {count} words, solve ok {solved}",
                    f.demands()
                ),
            );
        }
    }
    Ok(())
}

fn good_marriage(p: &SuiteParams, tally: &mut Tally) -> Result<()> {
    let mut instances = shellable_instances(p.bound, p.seed, p.samples);
    instances.extend(hook_instances(p.bound).into_iter().map(|(_, f, t)| (f, t)));
    for (fam, t) in instances {
        check_good_marriage(&fam, &t, |ok, msg| tally.check(ok, || msg))?;
    }
    Ok(())
}

fn converse(p: &SuiteParams, tally: &mut Tally) -> Result<()> {
    for (fam, t) in non_shellable_instances(p.bound, p.seed, p.samples)? {
        let f1 = Configuration::maximal(&fam);
        let (lower, upper) = m_range(&fam)?;
        let mut total = 0;
        for m in lower..=upper {
            total += count_satisfying_bounded(&fam, &t, &f1, m, fam.n())?;
        }
        tally.check(total == 0, || {
            format!("{fam}: f1 has {total} satisfying words")
        });
    }
    Ok(())
}

fn partition(p: &SuiteParams, tally: &mut Tally) -> Result<()> {
    let shellable = shellable_instances(p.bound, p.seed, p.samples);
    let others = non_shellable_instances(p.bound, p.seed ^ 1, p.samples / 4)?;
    let tagged = shellable
        .into_iter()
        .map(|x| (x, true))
        .chain(others.into_iter().map(|x| (x, false)));
    for ((fam, t), is_shellable) in tagged {
        let n = fam.n();
        let (lower, upper) = m_range(&fam)?;
        for m in lower..=upper {
            let counts = configuration_counts(&fam, &t, m, n)?;
            let surj = surjection_count(n, m);

            let mut histogram: HashMap<Vec<usize>, u64> = HashMap::new();
            let mut failure = None;
            for_each_surjection(n, m, |values| {
                let w = SurjectiveWord::new(m, values.to_vec()).expect("surjection");
                match configuration_of(&w, &fam, &t) {
                    Ok(f) => {
                        *histogram.entry(f.demands().to_vec()).or_default() += 1;
                        ControlFlow::Continue(())
                    }
                    Err(e) => {
                        failure = Some(e);
                        ControlFlow::Break(())
                    }
                }
            });
            if let Some(e) = failure {
                return Err(e);
            }
            let by_word = counts
                .counts
                .iter()
                .all(|(f, c)| histogram.get(f).copied().unwrap_or(0) == *c);
            tally.check(counts.total() == surj && by_word, || {
                format!("{fam}, m = {m}: total {} vs {surj}", counts.total())
            });
            if is_shellable {
                let formula = average_formula(&fam, m)?;
                tally.check(counts.min() >= 1 && counts.average() == formula, || {
                    format!(
                        "{fam}, m = {m}: min {}, average {} vs formula {formula}",
                        counts.min(),
                        counts.average()
                    )
                });
            }
        }
    }
    Ok(())
}

fn duality(p: &SuiteParams, tally: &mut Tally) -> Result<()> {
    for (fam, t) in shellable_instances(p.bound, p.seed, p.samples) {
        let f0 = Configuration::minimal(&fam);
        let f1 = Configuration::maximal(&fam);
        let mut agree = true;
        for w in permutations(fam.n()) {
            agree &= satisfies(&w, &fam, &t, &f0)? == satisfies(&w.reversed(), &fam, &t, &f1)?;
        }
        tally.check(agree, || format!("{fam}: duality fails"));
    }
    Ok(())
}

fn tail_bound(p: &SuiteParams, tally: &mut Tally) -> Result<()> {
    for (fam, t) in shellable_instances(p.bound, p.seed, p.samples) {
        let product: BigUint = fam
            .members()
            .iter()
            .map(|m| BigUint::from(m.len()))
            .product();
        let (lower, upper) = m_range(&fam)?;
        for m in lower..=upper {
            let counts = configuration_counts(&fam, &t, m, fam.n())?;
            let avg = counts.average();
            for k in [1u32, 2, 4] {
                let limit =
                    ExactRational::from(avg.as_big_rational() * num_bigint::BigInt::from(k));
                let within = counts.at_most(&limit);
                // #{A <= k avg} >= (1 - 1/k) prod  <=>  k #{...} >= (k - 1) prod
                let ok = BigUint::from(within) * k >= &product * (k - 1);
                tally.check(ok, || {
                    format!("{fam}, m = {m}, k = {k}: {within} of {product} within {limit}")
                });
            }
        }
    }
    Ok(())
}

fn closed_form(p: &SuiteParams, tally: &mut Tally) -> Result<()> {
    let mut instances = shellable_instances(p.bound, p.seed, p.samples);
    instances.extend(
        hook_instances(p.bound.min(7))
            .into_iter()
            .map(|(_, f, t)| (f, t)),
    );
    for (fam, _) in instances {
        let n = fam.n();
        let (lower, upper) = m_range(&fam)?;
        for m in lower.max(n.saturating_sub(2))..=upper {
            let closed = average_closed_form(&fam, m)?;
            let formula = average_formula(&fam, m)?;
            tally.check(closed == formula, || {
                format!("{fam}, m = {m}: {closed} vs {formula}")
            });
        }
    }
    Ok(())
}

fn stirling(p: &SuiteParams, tally: &mut Tally) -> Result<()> {
    for n in 1..=p.bound {
        for m in 1..=n {
            let a = stirling2(n, m);
            let b = stirling2_explicit(n, m);
            tally.check(a == b, || {
                format!("S({n}, {m}): recurrence {a}, explicit {b}")
            });
        }
    }
    for n in 1..=p.bound.min(8) {
        for m in 1..=n {
            let brute = surjections(n, m).len();
            let formula = surjection_count(n, m);
            tally.check(formula == BigUint::from(brute), || {
                format!("surjections({n}, {m}): {brute} enumerated, formula {formula}")
            });
        }
    }
    Ok(())
}

fn tableaux(p: &SuiteParams, tally: &mut Tally) -> Result<()> {
    for (shape, fam, t) in hook_instances(p.bound) {
        let unique = all_transversals_bounded(&fam, p.bound)?;
        let shellable = is_shellable(&fam)?;
        tally.check(
            shellable && unique == vec![identity_transversal(fam.n())],
            || format!("{shape:?}: shellable {shellable}, transversals {unique:?}"),
        );
        let n = fam.n();
        let standard = count_standard(&shape)?;
        let f0 = count_satisfying_bounded(&fam, &t, &Configuration::minimal(&fam), n, n)?;
        tally.check(standard == f0, || {
            format!("{shape:?}: {standard} standard, {f0} f0-words")
        });
    }
    for size in 1..=p.bound {
        for lambda in crate::shapes::partitions(size) {
            let shape = SkewShape::normal(lambda.clone())?;
            let standard = count_standard(&shape)?;
            let hook = hook_length_formula(&lambda)?;
            let balanced = count_balanced(&shape)?;
            balanced_configuration(&shape)?;
            tally.check(
                BigUint::from(standard) == hook && balanced == standard,
                || {
                    format!(
                        "{lambda:?}: {standard} standard, hook formula {hook}, {balanced} balanced"
                    )
                },
            );
        }
    }
    Ok(())
}

/// Every suite id.
pub fn suite_ids() -> impl Iterator<Item = &'static str> {
    SUITES.iter().map(|s| s.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_at_small_bounds() {
        for id in suite_ids() {
            let bound = if id == "stirling" { 10 } else { 3 };
            let report = run(id, &SuiteParams::new(bound, 1, 20)).unwrap();
            assert!(report.passed, "{report:?}");
            assert!(report.instances > 0, "{id} checked nothing");
        }
    }

    #[test]
    fn unknown_suite_and_bound() {
        let p = SuiteParams::new(3, 1, 1);
        assert_eq!(run("nope", &p), Err(Error::UnknownSuite("nope".into())));
        assert!(run("unique-transversal", &SuiteParams::new(30, 1, 1))
            .unwrap_err()
            .is_oracle_limit());
    }

    #[test]
    fn non_shellable_instances_are_non_shellable() {
        for (fam, t) in non_shellable_instances(4, 3, 30).unwrap() {
            assert!(!is_shellable(&fam).unwrap());
            t.validate(&fam).unwrap();
        }
    }
}
