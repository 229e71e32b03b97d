//! Result documents and their renderings.

use std::fmt::Write as _;

use num_bigint::BigUint;
use rankweight::distribution::{DistributionTable, Params};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsEcho {
    pub n: usize,
    pub k: usize,
    pub q: u64,
    pub m: usize,
}

impl From<Params> for ParamsEcho {
    fn from(p: Params) -> Self {
        ParamsEcho { n: p.n, k: p.k, q: p.q, m: p.m }
    }
}

impl From<&ParamsEcho> for Params {
    fn from(p: &ParamsEcho) -> Self {
        Params { n: p.n, k: p.k, q: p.q, m: p.m }
    }
}

/// `rows[r][w]` as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub params: ParamsEcho,
    pub rows: Vec<Vec<String>>,
}

impl TableJson {
    pub fn from_table(t: &DistributionTable) -> Self {
        TableJson {
            params: t.params.into(),
            rows: t.rows().iter().map(|row| row.iter().map(ToString::to_string).collect()).collect(),
        }
    }

    pub fn to_table(&self) -> Result<DistributionTable, CliError> {
        let rows =
            self.rows.iter().map(|row| row.iter().map(|s| parse_count(s)).collect()).collect::<Result<Vec<_>, _>>()?;
        DistributionTable::from_rows((&self.params).into(), rows).map_err(|e| CliError::Invalid(e.to_string()))
    }
}

pub fn parse_count(s: &str) -> Result<BigUint, CliError> {
    s.parse().map_err(|_| CliError::Invalid(format!("not a decimal count: {s:?}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub command: String,
    pub input: Value,
    pub method: String,
    pub result: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        pretty(&serde_json::to_value(self).expect("documents serialize"))
    }
}

/// Indented JSON with arrays of scalars kept on one line.
pub fn pretty(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

fn is_flat(items: &[Value]) -> bool {
    items.iter().all(|x| !x.is_array() && !x.is_object())
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if is_flat(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            let _ = write!(out, "[{}]", parts.join(", "));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}]", pad(indent));
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(indent + 1), Value::String(k.clone()));
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}}}", pad(indent));
        }
        _ => out.push_str(&v.to_string()),
    }
}

/// What a command produced: the document plus its `(r, w, count)` style
/// rows for the flat renderings.
pub struct Output {
    pub doc: ResultDocument,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.doc.to_json(),
            Format::Csv => {
                let mut s = self.header.join(",");
                s.push('\n');
                for row in &self.rows {
                    s.push_str(&row.join(","));
                    s.push('\n');
                }
                s
            }
            Format::Latex => {
                let mut s = String::new();
                let _ = writeln!(s, "{} \\\\ \\hline", self.header.join(" & "));
                for row in &self.rows {
                    let _ = writeln!(s, "{} \\\\", row.join(" & "));
                }
                s
            }
        }
    }
}

/// One `(r, w, count)` row per table entry.
pub fn table_rows(t: &DistributionTable) -> Vec<Vec<String>> {
    t.rows()
        .iter()
        .enumerate()
        .flat_map(|(r, row)| {
            row.iter().enumerate().map(move |(w, c)| vec![r.to_string(), w.to_string(), c.to_string()])
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> DistributionTable {
        let p = Params { n: 3, k: 1, q: 2, m: 4 };
        let rows = vec![vec![1u32, 0, 0, 0], vec![0, 0, 1, 0]]
            .into_iter()
            .map(|r| r.into_iter().map(BigUint::from).collect())
            .collect();
        DistributionTable::from_rows(p, rows).unwrap()
    }

    #[test]
    fn table_round_trip() {
        let t = table();
        let json = serde_json::to_string(&TableJson::from_table(&t)).unwrap();
        let back: TableJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_table().unwrap(), t);
        let huge = "123456789012345678901234567890";
        assert_eq!(parse_count(huge).unwrap().to_string(), huge);
        assert!(parse_count("-1").is_err());
    }

    #[test]
    fn renderings() {
        let out = Output {
            doc: ResultDocument {
                command: "dist".into(),
                input: Value::Null,
                method: "brute".into(),
                result: Value::Null,
                timing: None,
            },
            header: vec!["r", "w", "count"],
            rows: table_rows(&table()),
        };
        let csv = out.render(Format::Csv);
        assert_eq!(csv.lines().count(), 9);
        assert!(csv.contains("\n1,2,1\n"));
        let tex = out.render(Format::Latex);
        assert!(tex.starts_with("r & w & count \\\\ \\hline\n"));
        assert!(tex.contains("1 & 2 & 1 \\\\"));
        assert!(!out.render(Format::Json).contains("timing"));
    }

    #[test]
    fn pretty_keeps_flat_arrays_inline() {
        let v = serde_json::json!({"a": [1, 2], "b": [[1], []], "c": {}, "d": "x\"y"});
        let text = pretty(&v);
        assert_eq!(
            text,
            "{\n  \"a\": [1, 2],\n  \"b\": [\n    [1],\n    []\n  ],\n  \"c\": {},\n  \"d\": \"x\\\"y\"\n}\n"
        );
        assert_eq!(serde_json::from_str::<Value>(&text).unwrap(), v);
    }
}
