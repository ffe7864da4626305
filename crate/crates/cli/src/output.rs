//! Reports, tables and the two output formats.

use std::collections::BTreeMap;
use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use spfkit::C64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    #[default]
    Json,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed, detail: detail.into() }
    }
}

/// Flat rows for CSV; complex values take two adjacent columns.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

/// Shortest round-trip form; exponent notation for very small or large values.
pub fn num(x: f64) -> String {
    let a = x.abs();
    if a != 0.0 && a.is_finite() && !(1e-4..1e15).contains(&a) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

pub fn cx(z: C64) -> [String; 2] {
    [num(z.re), num(z.im)]
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub result: Value,
    pub checks: Vec<Check>,
    pub passed: bool,
    #[serde(skip)]
    pub table: Table,
}

impl Report {
    pub fn new(command: &str, inputs: BTreeMap<String, Value>, result: Value, table: Table, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        Self { command: command.into(), inputs, result, checks, passed, table }
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                let mut header: Vec<String> = self.inputs.keys().cloned().collect();
                header.extend(self.table.header.iter().cloned());
                debug_assert!(
                    header.iter().enumerate().all(|(i, h)| !header[..i].contains(h)),
                    "duplicate CSV column in {header:?}"
                );
                w.write_record(&header)?;
                let inputs: Vec<String> = self.inputs.values().map(plain).collect();
                for row in &self.table.rows {
                    w.write_record(inputs.iter().chain(row))?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
