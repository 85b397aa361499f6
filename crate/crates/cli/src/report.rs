//! Report emission. Every number in a JSON report is written as a decimal
//! string, and object keys are sorted, so identical results serialize to
//! identical bytes.

use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use serde_json::Value;
use starlab_core::{SetFamily, Witness};

use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

/// A report with its JSON body and its CSV summary.
pub struct Report {
    pub json: Value,
    pub csv_header: &'static [&'static str],
    pub csv_rows: Vec<Vec<String>>,
}

pub fn stringify_numbers(v: Value) -> Value {
    match v {
        Value::Number(n) => Value::String(n.to_string()),
        Value::Array(items) => Value::Array(items.into_iter().map(stringify_numbers).collect()),
        Value::Object(map) => Value::Object(
            map.into_iter()
                .map(|(k, v)| (k, stringify_numbers(v)))
                .collect(),
        ),
        other => other,
    }
}

/// Moves every nested `stats` object to a single top-level `stats` block.
pub fn hoist_stats(mut v: Value) -> Value {
    fn take(v: &mut Value, path: &str, out: &mut serde_json::Map<String, Value>) {
        if let Value::Object(map) = v {
            if let Some(s) = map.remove("stats") {
                out.insert(
                    if path.is_empty() {
                        "search".into()
                    } else {
                        path.to_string()
                    },
                    s,
                );
            }
            for (k, child) in map.iter_mut() {
                let p = if path.is_empty() {
                    k.clone()
                } else {
                    format!("{path}.{k}")
                };
                take(child, &p, out);
            }
        } else if let Value::Array(items) = v {
            for (i, child) in items.iter_mut().enumerate() {
                take(child, &format!("{path}[{i}]"), out);
            }
        }
    }
    let mut stats = serde_json::Map::new();
    take(&mut v, "", &mut stats);
    if let Value::Object(map) = &mut v {
        map.insert("stats".into(), Value::Object(stats));
    }
    v
}

pub fn emit(report: Report, format: OutputFormat, output: Option<&Path>) -> Result<(), CliError> {
    let mut text = match format {
        OutputFormat::Json => serde_json::to_string(&stringify_numbers(hoist_stats(report.json)))
            .expect("serializable"),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(report.csv_header).map_err(csv_err)?;
            for row in &report.csv_rows {
                w.write_record(row).map_err(csv_err)?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| CliError::Core(std::io::Error::other(e.to_string()).into()))?;
            String::from_utf8(bytes).expect("csv output is utf-8")
        }
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::in_file(path, e.into())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .map_err(|e| CliError::Core(e.into()))
        }
    }
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Core(std::io::Error::other(e.to_string()).into())
}

pub fn warn(v: Value) {
    eprintln!("{}", stringify_numbers(v));
}

/// Members of each part, written with their labels.
pub fn render_witness(fams: &[SetFamily], w: &Witness) -> Value {
    Value::Array(
        fams.iter()
            .zip(&w.parts)
            .map(|(f, part)| {
                part.iter()
                    .map(|&i| Value::String(f.format_member(f.member(i))))
                    .collect()
            })
            .collect(),
    )
}

pub fn render_witnesses(fams: &[SetFamily], ws: &[Witness]) -> Value {
    Value::Array(ws.iter().map(|w| render_witness(fams, w)).collect())
}
