use std::io::{self, Write};
use std::str::FromStr;

use serde_json::{json, Value};

use super::{Cell, FixtureValue, Row, Status, VerificationReport};
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Csv,
    /// One JSON object per line.
    Jsonl,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "csv" => Ok(ReportFormat::Csv),
            "jsonl" => Ok(ReportFormat::Jsonl),
            other => Err(Error::UnknownToken(other.to_string())),
        }
    }
}

pub const CSV_HEADER: &str = "family,p,quantity,oracle,closed,fixture,status";

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn cell_json(cell: &Cell) -> Value {
    match cell {
        Cell::Int(v) => int_json(*v),
        Cell::Real(v) => json!(v),
        Cell::Partition(p) => {
            Value::Array(p.classes().map(|((a, b), f)| json!([a, b, f])).collect())
        }
    }
}

fn int_json(v: i128) -> Value {
    i64::try_from(v)
        .map(Value::from)
        .unwrap_or_else(|_| Value::String(v.to_string()))
}

fn fixture_json(fx: &FixtureValue) -> Value {
    match fx {
        FixtureValue::Int(v) => int_json(*v),
        FixtureValue::Hundredths(_) => json!(fx.as_f64()),
        FixtureValue::Partition(p) => cell_json(&Cell::Partition(p.clone())),
    }
}

fn row_json(row: &Row) -> Value {
    json!({
        "family": row.family.token(),
        "p": row.p,
        "quantity": row.quantity.token(),
        "oracle": cell_json(&row.oracle),
        "closed": row.closed.as_ref().map(cell_json),
        "fixture": row.fixture.as_ref().map(fixture_json),
        "status": row.status.token(),
        "detail": row.detail,
    })
}

impl VerificationReport {
    pub fn write<W: Write>(&self, format: ReportFormat, out: W) -> io::Result<()> {
        match format {
            ReportFormat::Text => self.write_text(out),
            ReportFormat::Csv => self.write_csv(out),
            ReportFormat::Jsonl => self.write_jsonl(out),
        }
    }

    pub fn render(&self, format: ReportFormat) -> String {
        let mut buf = Vec::new();
        self.write(format, &mut buf).expect("writing to a Vec");
        String::from_utf8(buf).expect("reports are UTF-8")
    }

    /// Partition cells never contain commas, so no quoting is needed.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{CSV_HEADER}")?;
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.family,
                r.p,
                r.quantity,
                r.oracle,
                opt(&r.closed),
                opt(&r.fixture),
                r.status
            )?;
        }
        Ok(())
    }

    pub fn write_jsonl<W: Write>(&self, mut out: W) -> io::Result<()> {
        for r in &self.rows {
            serde_json::to_writer(&mut out, &row_json(r))?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn write_text<W: Write>(&self, mut out: W) -> io::Result<()> {
        let header = [
            "family", "p", "quantity", "oracle", "closed", "fixture", "status", "detail",
        ];
        let cells: Vec<[String; 8]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.family.to_string(),
                    r.p.to_string(),
                    r.quantity.to_string(),
                    r.oracle.to_string(),
                    opt(&r.closed),
                    opt(&r.fixture),
                    r.status.to_string(),
                    r.detail.clone(),
                ]
            })
            .collect();
        let mut widths = header.map(str::len);
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.len());
            }
        }
        let line = |out: &mut W, row: &[&str]| -> io::Result<()> {
            let mut s = String::new();
            for (i, (c, w)) in row.iter().zip(widths).enumerate() {
                if i + 1 == row.len() {
                    s.push_str(c);
                } else {
                    s.push_str(&format!("{c:<w$}  "));
                }
            }
            writeln!(out, "{}", s.trim_end())
        };
        line(&mut out, &header)?;
        for row in &cells {
            let refs: Vec<&str> = row.iter().map(String::as_str).collect();
            line(&mut out, &refs)?;
        }
        writeln!(
            out,
            "{} rows: {} match, {} known-discrepancy, {} mismatch",
            self.rows.len(),
            self.count(Status::Match),
            self.count(Status::KnownDiscrepancy),
            self.count(Status::Mismatch)
        )
    }
}
