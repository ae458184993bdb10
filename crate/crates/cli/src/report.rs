//! Report assembly and rendering. Keys are sorted (serde_json's default map
//! is a BTreeMap), so equal inputs give byte-identical output.

use std::fmt::Write as _;

use cubic27::{FieldElem, GfMatrix, GfProjectivity};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

pub struct Report {
    pub command: String,
    pub field: Option<String>,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub status: String,
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            field: None,
            inputs: Map::new(),
            results: Map::new(),
            status: "ok".to_string(),
            timing_ms: None,
        }
    }

    pub fn input(&mut self, key: &str, v: impl Into<Value>) {
        self.inputs.insert(key.to_string(), v.into());
    }

    pub fn result(&mut self, key: &str, v: impl Into<Value>) {
        self.results.insert(key.to_string(), v.into());
    }

    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        if let Some(f) = &self.field {
            m.insert("field".into(), json!(f));
        }
        m.insert("inputs".into(), Value::Object(self.inputs.clone()));
        m.insert("results".into(), Value::Object(self.results.clone()));
        m.insert("status".into(), json!(self.status));
        if let Some(t) = self.timing_ms {
            m.insert("timing_ms".into(), json!(t));
        }
        Value::Object(m)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_value()).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Tsv => self.tsv(),
        }
    }

    /// `rows` (an array of objects) becomes a table; otherwise one
    /// `key<TAB>value` line per result.
    fn tsv(&self) -> String {
        let mut out = String::new();
        if let Some(Value::Array(rows)) = self.results.get("rows") {
            let keys: Vec<String> = match rows.first() {
                Some(Value::Object(o)) => o.keys().cloned().collect(),
                _ => Vec::new(),
            };
            let _ = writeln!(out, "{}", keys.join("\t"));
            for r in rows {
                let cells: Vec<String> = keys.iter().map(|k| cell(r.get(k).unwrap_or(&Value::Null))).collect();
                let _ = writeln!(out, "{}", cells.join("\t"));
            }
            return out;
        }
        for (k, v) in &self.results {
            let _ = writeln!(out, "{k}\t{}", cell(v));
        }
        let _ = writeln!(out, "status\t{}", self.status);
        out
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn elem(x: &FieldElem) -> Value {
    json!(x.literal())
}

/// Row-major, entries as `0`, `1` or `g^j`.
pub fn matrix(m: &GfMatrix) -> Value {
    Value::Array((0..m.rows()).map(|r| Value::Array(m.row(r).iter().map(elem).collect())).collect())
}

pub fn projectivity(t: &GfProjectivity) -> Value {
    matrix(t.matrix())
}

pub fn coords(xs: &[FieldElem]) -> Value {
    Value::Array(xs.iter().map(elem).collect())
}
