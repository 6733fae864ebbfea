use std::io::Write;
use std::path::PathBuf;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Buffers a report and writes it once, to a file or stdout.
pub struct Sink {
    format: Format,
    path: Option<PathBuf>,
}

/// Column order for audit records in CSV form.
const RECORD_COLUMNS: [&str; 12] = [
    "statement_id",
    "instance",
    "sizes",
    "lhs",
    "rhs",
    "ratio",
    "approx_ratio",
    "holds",
    "witnesses",
    "notes",
    "metrics",
    "error",
];

impl Sink {
    pub fn new(format: Format, path: Option<PathBuf>) -> Self {
        Sink { format, path }
    }

    /// A single JSON object, or a one-row CSV table with the same fields.
    pub fn object<T: Serialize>(&self, value: &T) -> anyhow::Result<()> {
        let value = serde_json::to_value(value)?;
        let bytes = match self.format {
            Format::Json => {
                let mut s = serde_json::to_string(&value)?;
                s.push('\n');
                s.into_bytes()
            }
            Format::Csv => {
                let columns: Vec<String> = match &value {
                    Value::Object(m) => m.keys().cloned().collect(),
                    _ => vec!["value".into()],
                };
                table(&columns, std::slice::from_ref(&value))?
            }
        };
        self.write(&bytes)
    }

    /// NDJSON, or CSV with a fixed record header.
    pub fn records<T: Serialize>(&self, records: &[T]) -> anyhow::Result<()> {
        let values = records
            .iter()
            .map(serde_json::to_value)
            .collect::<Result<Vec<_>, _>>()?;
        let bytes = match self.format {
            Format::Json => {
                let mut out = String::new();
                for v in &values {
                    out.push_str(&serde_json::to_string(v)?);
                    out.push('\n');
                }
                out.into_bytes()
            }
            Format::Csv => {
                let columns: Vec<String> = RECORD_COLUMNS.iter().map(|c| c.to_string()).collect();
                table(&columns, &values)?
            }
        };
        self.write(&bytes)
    }

    fn write(&self, bytes: &[u8]) -> anyhow::Result<()> {
        match &self.path {
            Some(p) => std::fs::write(p, bytes)?,
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(bytes)?;
                out.flush()?;
            }
        }
        Ok(())
    }
}

fn table(columns: &[String], rows: &[Value]) -> anyhow::Result<Vec<u8>> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(columns)?;
    for row in rows {
        let cells: Vec<String> = columns
            .iter()
            .map(|c| match row.get(c.as_str()) {
                None | Some(Value::Null) => String::new(),
                Some(Value::String(s)) => s.clone(),
                Some(v) => v.to_string(),
            })
            .collect();
        w.write_record(&cells)?;
    }
    Ok(w.into_inner().map_err(|e| e.into_error())?)
}
