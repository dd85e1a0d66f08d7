use std::io::{self, Write};

use clap::ValueEnum;
use nu2_core::identities::IdentityReport;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Jsonl,
}

/// Rows destined for stdout. Table and CSV render `rows` under `columns`;
/// JSON lines render `records`, which carry the same data typed.
#[derive(Debug, Default)]
pub struct Records {
    columns: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    records: Vec<Value>,
    bare: bool,
}

impl Records {
    pub fn new(columns: &[&'static str]) -> Self {
        Records {
            columns: columns.to_vec(),
            ..Records::default()
        }
    }

    /// Table output without a header or padding, one value per line.
    pub fn bare(mut self) -> Self {
        self.bare = true;
        self
    }

    /// Adds a row whose JSON record maps each column to the given value.
    pub fn push(&mut self, values: Vec<Value>) {
        let cells = values.iter().map(cell).collect();
        let record: Map<String, Value> = self
            .columns
            .iter()
            .map(|c| c.to_string())
            .zip(values)
            .collect();
        self.rows.push(cells);
        self.records.push(Value::Object(record));
    }

    pub fn push_report(&mut self, report: &IdentityReport) {
        self.rows.push(report.fields().to_vec());
        self.records
            .push(serde_json::to_value(report).expect("reports serialize"));
    }

    pub fn reports(reports: &[IdentityReport]) -> Self {
        let mut out = Records::new(&IdentityReport::COLUMNS);
        for r in reports {
            out.push_report(r);
        }
        out
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Table => self.write_table(out),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.columns)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.flush()
            }
            Format::Jsonl => {
                for record in &self.records {
                    writeln!(out, "{record}")?;
                }
                Ok(())
            }
        }
    }

    fn write_table(&self, out: &mut impl Write) -> io::Result<()> {
        if self.bare {
            for row in &self.rows {
                writeln!(out, "{}", row.join(" "))?;
            }
            return Ok(());
        }
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for row in &self.rows {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let header: Vec<String> = self.columns.iter().map(|c| c.to_string()).collect();
        for row in std::iter::once(&header).chain(&self.rows) {
            let mut line = String::new();
            for (i, (c, w)) in row.iter().zip(&widths).enumerate() {
                if i + 1 == row.len() {
                    line.push_str(c);
                } else {
                    let pad = w - c.chars().count();
                    line.push_str(c);
                    line.push_str(&" ".repeat(pad + 2));
                }
            }
            writeln!(out, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
