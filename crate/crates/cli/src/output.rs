//! Command results as TOML tables, rendered as text or as a document.

use clap::ValueEnum;
use rankin_core::EulerFactor;
use toml::{Table, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

/// Result of a command. `ok = false` marks a failed property check.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub ok: bool,
    pub table: Table,
}

impl Report {
    pub fn new() -> Self {
        Report {
            ok: true,
            table: Table::new(),
        }
    }

    pub fn set(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.table.insert(key.into(), v.into());
        self
    }

    pub fn strings<I: IntoIterator<Item = S>, S: Into<String>>(&mut self, key: &str, items: I) -> &mut Self {
        let arr = items.into_iter().map(|s| Value::String(s.into())).collect::<Vec<_>>();
        self.set(key, Value::Array(arr))
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => toml::to_string(&self.table).expect("tables serialize"),
            Format::Text => {
                let mut out = String::new();
                text(&self.table, "", &mut out);
                out
            }
        }
    }
}

impl Default for Report {
    fn default() -> Self {
        Self::new()
    }
}

/// Encoded roots with multiplicities, e.g. `4` or `q^-1 * 1 * zeta(0) ^2`.
pub fn root_strings(l: &EulerFactor) -> Vec<String> {
    l.root_list()
        .into_iter()
        .map(|(r, m)| if m == 1 { r } else { format!("{r} ^{m}") })
        .collect()
}

fn text(t: &Table, prefix: &str, out: &mut String) {
    for (k, v) in t {
        let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
        match v {
            Value::Table(inner) => text(inner, &key, out),
            Value::Array(items) => {
                out.push_str(&format!("{key}:\n"));
                for it in items {
                    out.push_str(&format!("  - {}\n", scalar(it)));
                }
            }
            _ => out.push_str(&format!("{key}: {}\n", scalar(v))),
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Table(t) => t.iter().map(|(k, v)| format!("{k}={}", scalar(v))).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}
