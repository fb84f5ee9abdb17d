//! CSV and JSON emission.

use std::io::{self, Write};

use serde_json::{json, Map, Value};

use crate::args::Format;
use crate::format::{json_num, num};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => num(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => json_num(*x),
            Cell::Int(i) => json!(i),
            Cell::Text(s) => json!(s),
        }
    }
}

/// Rows under a fixed header.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn emit(&self, format: Format, meta: Map<String, Value>, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Csv => {
                writeln!(out, "{}", self.columns.join(","))?;
                for row in &self.rows {
                    let cells: Vec<_> = row.iter().map(Cell::csv).collect();
                    writeln!(out, "{}", cells.join(","))?;
                }
                Ok(())
            }
            Format::Json => {
                let mut obj = document(meta);
                obj.insert("columns".into(), json!(self.columns));
                let rows: Vec<Value> =
                    self.rows.iter().map(|r| Value::Array(r.iter().map(Cell::json).collect())).collect();
                obj.insert("rows".into(), Value::Array(rows));
                write_json(&Value::Object(obj), out)
            }
        }
    }
}

/// A single number: bare in CSV mode, `{"value": …}` plus metadata in JSON mode.
pub fn emit_scalar(value: f64, format: Format, meta: Map<String, Value>, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Csv => writeln!(out, "{}", num(value)),
        Format::Json => {
            let mut obj = document(meta);
            obj.insert("value".into(), json_num(value));
            write_json(&Value::Object(obj), out)
        }
    }
}

pub fn document(meta: Map<String, Value>) -> Map<String, Value> {
    let mut obj = Map::new();
    obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
    obj.extend(meta);
    obj
}

pub fn write_json(value: &Value, out: &mut dyn Write) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

pub fn params_json(params: &[(&'static str, f64)]) -> Value {
    Value::Object(params.iter().map(|(k, v)| (k.to_string(), json_num(*v))).collect())
}
