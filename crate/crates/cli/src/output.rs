//! Rendering of results as JSON or CSV, each carrying the run header.

use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{Format, RunConfig};
use crate::error::CliError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize)]
pub struct Header {
    pub tool: &'static str,
    pub version: &'static str,
    pub config_hash: String,
    pub seed: u64,
    pub command: String,
}

impl Header {
    pub fn new(cfg: &RunConfig) -> Self {
        let mut command = cfg.command.clone();
        for a in &cfg.args {
            command.push(' ');
            command.push_str(a);
        }
        Header { tool: "jquartic", version: VERSION, config_hash: cfg.hash(), seed: cfg.seed, command }
    }

    fn csv_line(&self) -> String {
        format!(
            "# {} {} config_hash={} seed={} command={}",
            self.tool, self.version, self.config_hash, self.seed, self.command
        )
    }
}

/// A flat table for the CSV rendering.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// What a command produced: a JSON summary and a table.
pub struct Artifact {
    pub summary: Value,
    pub table: Table,
}

fn render_json(header: &Header, cfg: &RunConfig, summary: &Value) -> String {
    let doc = json!({ "header": header, "config": cfg, "result": summary });
    let mut s = serde_json::to_string_pretty(&doc).expect("json renders");
    s.push('\n');
    s
}

fn render_csv(header: &Header, table: &Table) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&table.columns)?;
    for r in &table.rows {
        w.write_record(r)?;
    }
    let body = String::from_utf8(w.into_inner().map_err(|e| CliError::Io(e.into_error()))?)
        .expect("csv output is utf-8");
    Ok(format!("{}\n{body}", header.csv_line()))
}

/// Writes to `--out` (both renderings) or to stdout (the chosen one).
pub fn emit(cfg: &RunConfig, art: &Artifact) -> Result<(), CliError> {
    let header = Header::new(cfg);
    match &cfg.out {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            let write = |ext: &str, text: &str| -> Result<(), CliError> {
                let path = Path::new(dir).join(format!("{}.{ext}", cfg.command));
                std::fs::write(&path, text)?;
                eprintln!("wrote {}", path.display());
                Ok(())
            };
            write("json", &render_json(&header, cfg, &art.summary))?;
            write("csv", &render_csv(&header, &art.table)?)?;
        }
        None => {
            let text = match cfg.format {
                Format::Json => render_json(&header, cfg, &art.summary),
                Format::Csv => render_csv(&header, &art.table)?,
            };
            std::io::stdout().lock().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}
