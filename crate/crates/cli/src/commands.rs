use std::collections::BTreeSet;

use serde_json::{json, Map, Value};

use shellable::config::{count_satisfying_bounded, enumerate_configurations};
use shellable::counting::{average_bruteforce_bounded, configuration_counts, stirling2};
use shellable::family::all_transversals_bounded;
use shellable::shapes::{
    count_balanced, count_standard, count_standard_bounded, hook, hook_length, hook_length_formula,
    inner_corners, outer_corner_cells,
};
use shellable::verify::{self, SuiteParams};
use shellable::{
    average_closed_form, average_formula, configuration_of, find_transversal, is_shellable,
    m_range, satisfies, satisfies_marriage_condition, shelling_order, solve, surjection_count,
    unique_element_set, verify_shelling_order, ExactRational, ShellingOrder, SkewShape,
};

use crate::args::{Command, ConfigsCommand, CountCommand, FamilyInput, ShapeCommand, ShapeInput};
use crate::input::{self, parse, CliResult, Resolved};
use crate::report::Outcome;

/// The report's `command` field, e.g. `configs count`.
pub fn name(cmd: &Command) -> String {
    match cmd {
        Command::Marriage(_) => "marriage".into(),
        Command::Transversal(_) => "transversal".into(),
        Command::Transversals { .. } => "transversals".into(),
        Command::Shellable(_) => "shellable".into(),
        Command::ShellingOrder { .. } => "shelling-order".into(),
        Command::UniqueSet(_) => "unique-set".into(),
        Command::MRange(_) => "m-range".into(),
        Command::Configs(c) => format!(
            "configs {}",
            match c {
                ConfigsCommand::Enumerate(_) => "enumerate",
                ConfigsCommand::Count { .. } => "count",
                ConfigsCommand::Solve { .. } => "solve",
                ConfigsCommand::Classify { .. } => "classify",
            }
        ),
        Command::Shape(c) => format!(
            "shape {}",
            match c {
                ShapeCommand::Hooks(_) => "hooks",
                ShapeCommand::Family(_) => "family",
                ShapeCommand::Corners(_) => "corners",
                ShapeCommand::SytCount { .. } => "syt-count",
                ShapeCommand::BalancedCheck { .. } => "balanced-check",
            }
        ),
        Command::Count(c) => format!(
            "count {}",
            match c {
                CountCommand::Stirling { .. } => "stirling",
                CountCommand::Surjections { .. } => "surjections",
                CountCommand::Average { .. } => "average",
                CountCommand::AverageBrute { .. } => "average-brute",
                CountCommand::AverageClosed { .. } => "average-closed",
            }
        ),
        Command::Verify { .. } => "verify".into(),
    }
}

pub fn rational(r: &ExactRational) -> Value {
    let (whole, frac) = r.split();
    json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
        "text": r.to_string(),
        "integer_part": whole.to_string(),
        "fractional_part": frac.to_string(),
    })
}

/// Elements as numbers, plus their cells when the family came from a shape.
fn elements(resolved: &Resolved, set: &BTreeSet<usize>) -> Value {
    match &resolved.shape {
        Some(shape) => json!({
            "elements": set,
            "cells": set.iter().map(|&e| shape.cell_of(e)).collect::<Vec<_>>(),
        }),
        None => json!({ "elements": set }),
    }
}

pub fn execute(cmd: &Command) -> CliResult<Outcome> {
    match cmd {
        Command::Marriage(input) => {
            let r = input::family(input)?;
            r.family.ensure_nonempty_members()?;
            let ok = satisfies_marriage_condition(&r.family);
            Ok(Outcome::predicate(r.echo, json!(ok), ok))
        }
        Command::Transversal(input) => {
            let r = input::family(input)?;
            let t = find_transversal(&r.family)?;
            Ok(Outcome::value(r.echo, json!(t)))
        }
        Command::Transversals { input, bound } => {
            let mut r = input::family(input)?;
            let all = all_transversals_bounded(&r.family, *bound)?;
            r.echo.insert("bound".into(), json!(bound));
            Ok(Outcome::value(r.echo, json!(all)))
        }
        Command::Shellable(input) => {
            let r = input::family(input)?;
            let ok = is_shellable(&r.family)?;
            Ok(Outcome::predicate(r.echo, json!(ok), ok))
        }
        Command::ShellingOrder { input, order } => {
            let mut r = input::family(input)?;
            match order {
                Some(text) => {
                    let raw: Vec<usize> = parse("order", text)?;
                    let ord = ShellingOrder::from_one_based(&raw)?;
                    r.echo.insert("order".into(), json!(ord));
                    let ok = verify_shelling_order(&r.family, &ord)?;
                    Ok(Outcome::predicate(r.echo, json!(ok), ok))
                }
                None => {
                    let ord = shelling_order(&r.family)?;
                    Ok(Outcome::value(r.echo, json!(ord)))
                }
            }
        }
        Command::UniqueSet(input) => {
            let r = input::family(input)?;
            let s = unique_element_set(&r.family);
            let result = elements(&r, &s);
            Ok(Outcome::value(r.echo, result))
        }
        Command::MRange(input) => {
            let r = input::family(input)?;
            let (lower, upper) = m_range(&r.family)?;
            Ok(Outcome::value(r.echo, json!([lower, upper])))
        }
        Command::Configs(c) => configs(c),
        Command::Shape(c) => shape(c),
        Command::Count(c) => count(c),
        Command::Verify {
            suite,
            bound,
            seed,
            samples,
        } => run_suite(suite, *bound, *seed, *samples),
    }
}

fn configs(cmd: &ConfigsCommand) -> CliResult<Outcome> {
    match cmd {
        ConfigsCommand::Enumerate(input) => {
            let (r, t) = input::family_with_transversal(input)?;
            let all: Vec<Value> = enumerate_configurations(&r.family, &t)?
                .map(|f| json!(f.demands()))
                .collect();
            Ok(Outcome::value(r.echo, Value::Array(all)))
        }
        ConfigsCommand::Count {
            input,
            m,
            config,
            bound,
        } => {
            let (mut r, t) = input::family_with_transversal(input)?;
            r.echo.insert("m".into(), json!(m));
            r.echo.insert("bound".into(), json!(bound));
            match config {
                Some(text) => {
                    let f = input::configuration(text, &r.family)?;
                    r.echo.insert("config".into(), json!(f.demands()));
                    let count = count_satisfying_bounded(&r.family, &t, &f, *m, *bound)?;
                    Ok(Outcome::value(r.echo, json!(count)))
                }
                None => {
                    let counts = configuration_counts(&r.family, &t, *m, *bound)?;
                    let rows: Vec<Value> = counts
                        .counts
                        .iter()
                        .map(|(f, c)| json!({ "config": f, "count": c }))
                        .collect();
                    Ok(Outcome::value(r.echo, Value::Array(rows)))
                }
            }
        }
        ConfigsCommand::Solve { input, m, config } => {
            let (mut r, t) = input::family_with_transversal(input)?;
            let f = input::configuration(config, &r.family)?;
            r.echo.insert("m".into(), json!(m));
            r.echo.insert("config".into(), json!(f.demands()));
            let w = solve(&r.family, &t, &f, *m)?;
            Ok(Outcome::value(
                r.echo,
                json!(w.map(|w| w.values().to_vec())),
            ))
        }
        ConfigsCommand::Classify {
            input,
            word,
            config,
        } => {
            let (mut r, t) = input::family_with_transversal(input)?;
            let w = input::word(word)?;
            r.echo.insert("word".into(), json!(w.values()));
            let f = configuration_of(&w, &r.family, &t)?;
            match config {
                Some(text) => {
                    let g = input::configuration(text, &r.family)?;
                    r.echo.insert("config".into(), json!(g.demands()));
                    let ok = satisfies(&w, &r.family, &t, &g)?;
                    Ok(Outcome::predicate(r.echo, json!(ok), ok))
                }
                None => Ok(Outcome::value(r.echo, json!(f.demands()))),
            }
        }
    }
}

fn shape_of(input: &ShapeInput) -> CliResult<(SkewShape, Map<String, Value>)> {
    let shape: SkewShape = parse("shape", &input.shape)?;
    let mut echo = Map::new();
    echo.insert("shape".into(), json!(shape));
    Ok((shape, echo))
}

fn shape(cmd: &ShapeCommand) -> CliResult<Outcome> {
    match cmd {
        ShapeCommand::Hooks(input) => {
            let (shape, echo) = shape_of(input)?;
            let mut rows = Vec::new();
            for (k, &c) in shape.cells().iter().enumerate() {
                rows.push(json!({
                    "element": k + 1,
                    "cell": c,
                    "hook": hook(&shape, c)?,
                    "hook_length": hook_length(&shape, c)?,
                }));
            }
            Ok(Outcome::value(echo, Value::Array(rows)))
        }
        ShapeCommand::Family(input) => {
            let (shape, echo) = shape_of(input)?;
            let (fam, t) = shellable::hook_family(&shape);
            Ok(Outcome::value(
                echo,
                json!({ "family": fam, "transversal": t, "cells": shape.cells() }),
            ))
        }
        ShapeCommand::Corners(input) => {
            let (shape, echo) = shape_of(input)?;
            Ok(Outcome::value(
                echo,
                json!({
                    "inner_corners": inner_corners(shape.lambda()),
                    "singleton_hooks": outer_corner_cells(&shape),
                }),
            ))
        }
        ShapeCommand::SytCount { input, bound } => {
            let (shape, mut echo) = shape_of(input)?;
            echo.insert("bound".into(), json!(bound));
            let count = count_standard_bounded(&shape, *bound)?;
            Ok(Outcome::value(echo, json!(count)))
        }
        ShapeCommand::BalancedCheck { input, tableau } => {
            let (shape, mut echo) = shape_of(input)?;
            match tableau {
                Some(text) => {
                    let t = input::tableau(text, &shape)?;
                    echo.insert("tableau".into(), json!(t.to_row_major()));
                    let ok = t.is_balanced()?;
                    Ok(Outcome::predicate(echo, json!(ok), ok))
                }
                None => {
                    let balanced = count_balanced(&shape)?;
                    let standard = count_standard(&shape)?;
                    let formula = hook_length_formula(shape.lambda())?;
                    let equal =
                        u64::try_from(&formula).ok() == Some(balanced) && balanced == standard;
                    Ok(Outcome::predicate(
                        echo,
                        json!({
                            "balanced": balanced,
                            "standard": standard,
                            "hook_length_formula": formula.to_string(),
                            "equal": equal,
                        }),
                        equal,
                    ))
                }
            }
        }
    }
}

fn family_and_m(input: &FamilyInput, m: usize) -> CliResult<Resolved> {
    let mut r = input::family(input)?;
    r.echo.insert("m".into(), json!(m));
    Ok(r)
}

fn count(cmd: &CountCommand) -> CliResult<Outcome> {
    match cmd {
        CountCommand::Stirling { n, m } => Ok(Outcome::value(
            Map::from_iter([("n".into(), json!(n)), ("m".into(), json!(m))]),
            json!(stirling2(*n, *m).to_string()),
        )),
        CountCommand::Surjections { n, m } => Ok(Outcome::value(
            Map::from_iter([("n".into(), json!(n)), ("m".into(), json!(m))]),
            json!(surjection_count(*n, *m).to_string()),
        )),
        CountCommand::Average { input, m } => {
            let r = family_and_m(input, *m)?;
            let avg = average_formula(&r.family, *m)?;
            Ok(Outcome::value(r.echo, rational(&avg)))
        }
        CountCommand::AverageClosed { input, m } => {
            let r = family_and_m(input, *m)?;
            let avg = average_closed_form(&r.family, *m)?;
            Ok(Outcome::value(r.echo, rational(&avg)))
        }
        CountCommand::AverageBrute { input, m, bound } => {
            let (mut r, t) = input::family_with_transversal(input)?;
            r.echo.insert("m".into(), json!(m));
            r.echo.insert("bound".into(), json!(bound));
            let avg = average_bruteforce_bounded(&r.family, &t, *m, *bound)?;
            Ok(Outcome::value(r.echo, rational(&avg)))
        }
    }
}

fn run_suite(suite: &str, bound: Option<usize>, seed: u64, samples: usize) -> CliResult<Outcome> {
    if suite == "list" {
        let rows: Vec<Value> = verify::SUITES
            .iter()
            .map(|&(id, default, max, about)| {
                json!({ "suite": id, "default_bound": default, "max_bound": max, "checks": about })
            })
            .collect();
        return Ok(Outcome::value(Map::new(), Value::Array(rows)));
    }
    let defaults = SuiteParams::defaults(suite)?;
    let params = SuiteParams::new(bound.unwrap_or(defaults.bound), seed, samples);
    let echo = Map::from_iter([
        ("suite".into(), json!(suite)),
        ("bound".into(), json!(params.bound)),
        ("seed".into(), json!(seed)),
        ("samples".into(), json!(samples)),
    ]);
    let report = verify::run(suite, &params)?;
    let passed = report.passed;
    Ok(Outcome::predicate(echo, json!(report), passed))
}
