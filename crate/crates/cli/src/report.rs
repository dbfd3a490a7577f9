//! Deterministic report assembly.
//!
//! JSON reports are canonical: objects carry sorted keys (the default
//! `serde_json` map is ordered), integers are unquoted, rationals are
//! `"p/q"` strings. Identical inputs and flags produce byte-identical
//! output, and parsing a report and re-serializing it is the identity.

use std::collections::BTreeMap;

use serde_json::{Map, Value};

pub const REPORT_VERSION: u64 = 1;

pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub warnings: Vec<String>,
    pub text: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Map::new(),
            results: Map::new(),
            warnings: Vec::new(),
            text: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: Value) -> &mut Self {
        self.inputs.insert(key.to_string(), value);
        self
    }

    pub fn result(&mut self, key: &str, value: Value) -> &mut Self {
        self.results.insert(key.to_string(), value);
        self
    }

    pub fn warn(&mut self, message: impl Into<String>) -> &mut Self {
        self.warnings.push(message.into());
        self
    }

    pub fn line(&mut self, line: impl Into<String>) -> &mut Self {
        self.text.push(line.into());
        self
    }

    pub fn to_json(&self) -> String {
        let mut top = Map::new();
        top.insert("command".into(), Value::String(self.command.clone()));
        top.insert("inputs".into(), Value::Object(self.inputs.clone()));
        top.insert("results".into(), Value::Object(self.results.clone()));
        top.insert("version".into(), Value::from(REPORT_VERSION));
        top.insert(
            "warnings".into(),
            Value::Array(self.warnings.iter().cloned().map(Value::String).collect()),
        );
        serde_json::to_string(&Value::Object(top)).expect("report serialization cannot fail")
    }

    pub fn print(&self, json: bool) {
        if json {
            println!("{}", self.to_json());
        } else {
            for line in &self.text {
                println!("{line}");
            }
            for warning in &self.warnings {
                println!("warning: {warning}");
            }
        }
    }
}

pub fn error_json(command: &str, kind: &str, message: &str) -> String {
    let mut error = Map::new();
    error.insert("kind".into(), Value::String(kind.to_string()));
    error.insert("message".into(), Value::String(message.to_string()));
    let mut top = Map::new();
    top.insert("command".into(), Value::String(command.to_string()));
    top.insert("error".into(), Value::Object(error));
    top.insert("version".into(), Value::from(REPORT_VERSION));
    serde_json::to_string(&Value::Object(top)).expect("error serialization cannot fail")
}

/// Integer-keyed rank maps as JSON objects with stringified keys.
pub fn ranks_value(map: &BTreeMap<i64, usize>) -> Value {
    Value::Object(
        map.iter()
            .map(|(k, v)| (k.to_string(), Value::from(*v as u64)))
            .collect(),
    )
}

/// `g:r` pairs in ascending grading order for text output.
pub fn ranks_text(map: &BTreeMap<i64, usize>) -> String {
    if map.is_empty() {
        return "(empty)".into();
    }
    map.iter()
        .map(|(k, v)| format!("{k}:{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}
