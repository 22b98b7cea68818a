use serde::Deserialize;
use serde_json::{json, Map, Value};

use shellable::{
    find_transversal, hook_family, Configuration, SetFamily, SkewShape, SurjectiveWord, Tableau,
    Transversal,
};

use crate::args::{FamilyInput, TransversalInput};

#[derive(Debug)]
pub enum CliError {
    /// A flag value that is not valid JSON for what it describes.
    Json {
        flag: &'static str,
        message: String,
    },
    /// A missing or contradictory flag.
    Usage(String),
    Core(shellable::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_oracle_limit() => 3,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Json { .. } => "malformed-json",
            CliError::Usage(_) => "usage",
            CliError::Core(e) if e.is_oracle_limit() => "oracle-limit",
            CliError::Core(shellable::Error::MOutOfRange { .. })
            | CliError::Core(shellable::Error::Hypothesis(_)) => "hypothesis",
            CliError::Core(_) => "invalid-input",
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Json { flag, message } => format!("--{flag}: {message}"),
            CliError::Usage(m) => m.clone(),
            CliError::Core(e) => e.to_string(),
        }
    }
}

impl From<shellable::Error> for CliError {
    fn from(e: shellable::Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn parse<T: for<'de> Deserialize<'de>>(flag: &'static str, text: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| CliError::Json {
        flag,
        message: e.to_string(),
    })
}

/// A family together with the shape it came from, if any, and an echo of the input.
pub struct Resolved {
    pub family: SetFamily,
    pub shape: Option<SkewShape>,
    pub transversal: Option<Transversal>,
    pub echo: Map<String, Value>,
}

pub fn family(input: &FamilyInput) -> CliResult<Resolved> {
    let mut echo = Map::new();
    match (&input.family, &input.shape) {
        (Some(text), None) => {
            let family: SetFamily = parse("family", text)?;
            echo.insert("family".into(), json!(family));
            Ok(Resolved {
                family,
                shape: None,
                transversal: None,
                echo,
            })
        }
        (None, Some(text)) => {
            let shape: SkewShape = parse("shape", text)?;
            let (family, t) = hook_family(&shape);
            echo.insert("shape".into(), json!(shape));
            echo.insert("family".into(), json!(family));
            Ok(Resolved {
                family,
                shape: Some(shape),
                transversal: Some(t),
                echo,
            })
        }
        (None, None) => Err(CliError::Usage(
            "one of --family or --shape is required".into(),
        )),
        (Some(_), Some(_)) => Err(CliError::Usage("give --family or --shape, not both".into())),
    }
}

/// Resolves the family and a transversal: the given one, the identity for shapes,
/// or the first one found.
pub fn family_with_transversal(input: &TransversalInput) -> CliResult<(Resolved, Transversal)> {
    let mut resolved = family(&input.source)?;
    let t = match &input.transversal {
        Some(text) => {
            let raw: Vec<usize> = parse("transversal", text)?;
            Transversal::for_family(&resolved.family, raw)?
        }
        None => match resolved.transversal.take() {
            Some(t) => t,
            None => find_transversal(&resolved.family)?.ok_or_else(|| {
                CliError::Core(shellable::Error::Hypothesis(
                    "family has no transversal".into(),
                ))
            })?,
        },
    };
    resolved.echo.insert("transversal".into(), json!(t));
    resolved.transversal = Some(t.clone());
    Ok((resolved, t))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ConfigText {
    List(Vec<usize>),
    Object { demands: Vec<usize> },
}

/// A configuration given as `[d1, ...]` or `{"demands": [d1, ...]}`.
pub fn configuration(text: &str, fam: &SetFamily) -> CliResult<Configuration> {
    let demands = match parse::<ConfigText>("config", text)? {
        ConfigText::List(d) | ConfigText::Object { demands: d } => d,
    };
    Ok(Configuration::for_family(fam, demands)?)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WordText {
    List(Vec<usize>),
    Object(SurjectiveWord),
}

/// A word given as a list of values (`m` is the largest) or as `{"m": .., "values": ..}`.
pub fn word(text: &str) -> CliResult<SurjectiveWord> {
    match parse::<WordText>("word", text)? {
        WordText::List(values) => Ok(SurjectiveWord::from_values(values)?),
        WordText::Object(w) => Ok(w),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum TableauText {
    Rows(Vec<Vec<Option<usize>>>),
    Flat(Vec<Option<usize>>),
}

/// A filling given as rows over `λ` (or one row-major list), `null` on cells of `μ`.
pub fn tableau(text: &str, shape: &SkewShape) -> CliResult<Tableau> {
    let raw = match parse::<TableauText>("tableau", text)? {
        TableauText::Rows(rows) => {
            if rows.len() != shape.lambda().len()
                || rows
                    .iter()
                    .zip(shape.lambda())
                    .any(|(r, &len)| r.len() != len)
            {
                return Err(CliError::Core(shellable::Error::InvalidTableau(format!(
                    "row lengths must be {:?}",
                    shape.lambda()
                ))));
            }
            rows.into_iter().flatten().collect()
        }
        TableauText::Flat(flat) => flat,
    };
    Ok(Tableau::from_row_major(shape.clone(), &raw)?)
}
