use serde_json::{json, Map, Value};

use crate::input::CliError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// What a command computed: the echoed inputs, the payload, and for predicates the
/// boolean that decides the exit code.
pub struct Outcome {
    pub inputs: Map<String, Value>,
    pub result: Value,
    pub verdict: Option<bool>,
}

impl Outcome {
    pub fn value(inputs: Map<String, Value>, result: Value) -> Self {
        Outcome {
            inputs,
            result,
            verdict: None,
        }
    }

    pub fn predicate(inputs: Map<String, Value>, result: Value, verdict: bool) -> Self {
        Outcome {
            inputs,
            result,
            verdict: Some(verdict),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.verdict {
            Some(false) => 1,
            _ => 0,
        }
    }
}

pub fn report(command: &str, outcome: &Outcome) -> Value {
    canonical(json!({
        "command": command,
        "inputs": Value::Object(outcome.inputs.clone()),
        "result": outcome.result,
        "version": VERSION,
    }))
}

pub fn error_report(command: &str, error: &CliError) -> Value {
    canonical(json!({
        "command": command,
        "error": { "kind": error.kind(), "message": error.message() },
        "version": VERSION,
    }))
}

/// Rebuilds `v` with every object's keys in sorted order.
pub fn canonical(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let mut entries: Vec<(String, Value)> = map.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(
                entries
                    .into_iter()
                    .map(|(k, v)| (k, canonical(v)))
                    .collect(),
            )
        }
        Value::Array(items) => Value::Array(items.into_iter().map(canonical).collect()),
        other => other,
    }
}

pub fn to_json(report: &Value) -> String {
    serde_json::to_string(report).expect("JSON values always serialize")
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Flattens a result payload into CSV.
///
/// Arrays of objects become one row per object under the sorted union of keys,
/// other arrays one row per element, objects one `key,value` row per field, and
/// scalars a single `result` column.
pub fn to_csv(result: &Value) -> String {
    let mut w = csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new());
    let mut write = |record: Vec<String>| w.write_record(&record).expect("writing to memory");
    match result {
        Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
            let mut keys: Vec<String> = items
                .iter()
                .flat_map(|o| o.as_object().unwrap().keys().cloned())
                .collect();
            keys.sort();
            keys.dedup();
            write(keys.clone());
            for item in items {
                write(
                    keys.iter()
                        .map(|k| item.get(k).map(cell).unwrap_or_default())
                        .collect(),
                );
            }
        }
        Value::Array(items) => {
            let width = items
                .iter()
                .map(|i| i.as_array().map_or(1, Vec::len))
                .max()
                .unwrap_or(1);
            write((1..=width).map(|i| format!("c{i}")).collect());
            for item in items {
                match item {
                    Value::Array(parts) => write(parts.iter().map(cell).collect()),
                    other => write(vec![cell(other)]),
                }
            }
        }
        Value::Object(map) => {
            write(vec!["key".into(), "value".into()]);
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            for k in keys {
                write(vec![k.clone(), cell(&map[k])]);
            }
        }
        scalar => {
            write(vec!["result".into()]);
            write(vec![cell(scalar)]);
        }
    }
    let bytes = w.into_inner().expect("flushing to memory");
    String::from_utf8(bytes).expect("CSV of UTF-8 fields is UTF-8")
}
