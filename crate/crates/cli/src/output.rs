//! CSV plot data and the two report renderings.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

/// Bumped whenever a column is added, removed or reordered.
pub const CSV_VERSION: u32 = 1;

pub struct Table {
    pub kind: &'static str,
    pub meta: Vec<(String, String)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

pub enum Cell {
    Num(f64),
    Text(String),
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.into())
    }
}

impl Table {
    pub fn new(kind: &'static str, columns: Vec<&'static str>) -> Self {
        Table { kind, meta: Vec::new(), columns, rows: Vec::new() }
    }

    pub fn meta(mut self, key: &str, value: impl ToString) -> Self {
        self.meta.push((key.into(), value.to_string()));
        self
    }

    pub fn render(&self) -> String {
        let mut out = format!("# isodens-csv v{CSV_VERSION} {}", self.kind);
        for (k, v) in &self.meta {
            out.push_str(&format!(" {k}={v}"));
        }
        out.push('\n');
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|c| match c {
                    // 17 significant digits round-trip every f64
                    Cell::Num(x) => format!("{x:.16e}"),
                    Cell::Text(s) => s.clone(),
                })
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn emit(&self, path: Option<&Path>) -> io::Result<()> {
        match path {
            Some(p) => fs::write(p, self.render()),
            None => io::stdout().write_all(self.render().as_bytes()),
        }
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize to JSON")
}

/// Indented `key: value` lines, one per leaf.
pub fn human<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("reports serialize to JSON");
    let mut out = String::new();
    walk(&v, 0, &mut out);
    out
}

fn leaf(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Number(n) => match n.as_f64() {
            Some(x) if n.is_f64() && x != 0.0 && !(1e-4..1e15).contains(&x.abs()) => format!("{x:e}"),
            Some(x) if n.is_f64() => format!("{x}"),
            _ => n.to_string(),
        },
        other => other.to_string(),
    }
}

fn walk(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if x.is_object() || (x.is_array() && x.as_array().is_some_and(|a| a.iter().any(|e| e.is_object()))) {
                    out.push_str(&format!("{pad}{k}:\n"));
                    walk(x, depth + 1, out);
                } else {
                    out.push_str(&format!("{pad}{k}: {}\n", inline(x)));
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                if x.is_object() {
                    out.push_str(&format!("{pad}[{i}]\n"));
                    walk(x, depth + 1, out);
                } else {
                    out.push_str(&format!("{pad}{}\n", inline(x)));
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", leaf(other))),
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(a) => format!("[{}]", a.iter().map(inline).collect::<Vec<_>>().join(", ")),
        other => leaf(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let mut t = Table::new("demo", vec!["family", "x"]).meta("lambda", 2.0);
        t.rows.push(vec!["a".into(), 0.1.into()]);
        assert_eq!(t.render(), "# isodens-csv v1 demo lambda=2\nfamily,x\na,1.0000000000000001e-1\n");
    }

    #[test]
    fn human_rendering_flattens_objects() {
        let v = serde_json::json!({"a": 1.5, "b": {"c": [1, 2]}});
        assert_eq!(human(&v), "a: 1.5\nb:\n  c: [1, 2]\n");
    }
}
