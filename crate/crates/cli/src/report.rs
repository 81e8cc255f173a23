use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde_json::Value;

use crate::args::Format;

pub const EXIT_INPUT: u8 = 1;
pub const EXIT_AMBIGUOUS: u8 = 2;
pub const EXIT_NONE: u8 = 3;
pub const EXIT_VERIFY: u8 = 4;
pub const EXIT_BUDGET: u8 = 5;

#[derive(Debug)]
pub enum CliError {
    Core(trace_recon::Error),
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(trace_recon::Error::Budget { .. }) => EXIT_BUDGET,
            CliError::Core(trace_recon::Error::Internal(_)) => EXIT_VERIFY,
            _ => EXIT_INPUT,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Input(msg) => f.write_str(msg),
        }
    }
}

impl From<trace_recon::Error> for CliError {
    fn from(e: trace_recon::Error) -> Self {
        CliError::Core(e)
    }
}

/// A command result in every output format, plus the process exit status.
#[derive(Debug)]
pub struct Report {
    pub json: Value,
    pub csv: String,
    pub plain: String,
    pub status: u8,
}

impl Report {
    pub fn new(json: Value, csv: String, plain: String) -> Self {
        Report { json, csv, plain, status: 0 }
    }

    pub fn with_status(mut self, status: u8) -> Self {
        self.status = status;
        self
    }

    pub fn render(&self, format: Format) -> String {
        let mut s = match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("json values always serialize"),
            Format::Csv => self.csv.clone(),
            Format::Plain => self.plain.clone(),
        };
        if !s.ends_with('\n') {
            s.push('\n');
        }
        s
    }

    pub fn emit(&self, format: Format, out: Option<&Path>) -> io::Result<()> {
        let text = self.render(format);
        match out {
            Some(path) => fs::write(path, text),
            None => {
                let mut stdout = io::stdout().lock();
                stdout.write_all(text.as_bytes())?;
                stdout.flush()
            }
        }
    }
}

/// CSV text from a header and rows.
pub fn csv_table(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut s = String::from(header);
    s.push('\n');
    for row in rows {
        s.push_str(&row);
        s.push('\n');
    }
    s
}

/// Decimal string for any displayable number.
pub fn num(v: impl fmt::Display) -> Value {
    Value::String(v.to_string())
}

/// Shortest round-trip scientific rendering of a float.
pub fn float(v: f64) -> Value {
    Value::String(format!("{v:e}"))
}
