use serde_json::{Map, Value};

use triassoc::{Scalar, Subspace};

/// Ordered key/value report, printed as `key = value` lines or as one JSON object.
#[derive(Default)]
pub struct Report {
    entries: Vec<(String, Value)>,
}

impl Report {
    pub fn put(&mut self, key: impl Into<String>, value: impl Into<Value>) {
        self.entries.push((key.into(), value.into()));
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let map: Map<String, Value> = self.entries.iter().cloned().collect();
            let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("plain data serializes");
            s.push('\n');
            return s;
        }
        self.entries.iter().map(|(k, v)| format!("{k} = {}\n", text(v))).collect()
    }
}

fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(text).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

pub fn vector(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(s.to_string())).collect())
}

pub fn basis(s: &Subspace) -> Value {
    Value::Array(s.basis_vectors().map(vector).collect())
}

pub fn numbers(v: &[usize]) -> Value {
    Value::Array(v.iter().map(|&x| Value::from(x)).collect())
}
