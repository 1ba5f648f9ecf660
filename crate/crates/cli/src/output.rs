//! Output envelopes, text rendering and exit codes.

use std::fmt::Write as _;
use std::io::Write as _;

use clap::ValueEnum;
use clifford_invariants::Error;
use serde_json::{json, Value};

use crate::Global;

/// Version of the JSON envelope `{schema_version, command, ok, result}`.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_VERIFICATION_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_UNKNOWN_CODE: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;
pub const EXIT_INVALID_INPUT: u8 = 5;
pub const EXIT_UNSUPPORTED: u8 = 6;
pub const EXIT_INTERNAL: u8 = 7;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("unknown code {0:?}: not a registry name or a readable file")]
    UnknownCode(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] Error),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::UnknownCode(_) => EXIT_UNKNOWN_CODE,
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Library(e) => match e {
                Error::Budget(_) | Error::ClosureOverflow { .. } => EXIT_BUDGET,
                Error::InvalidInput(_) | Error::DimensionMismatch { .. } => EXIT_INVALID_INPUT,
                Error::Unsupported(_) | Error::UnsupportedConductor(_) => EXIT_UNSUPPORTED,
                _ => EXIT_INTERNAL,
            },
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

/// What a subcommand produced.
pub struct Outcome {
    pub command: String,
    pub ok: bool,
    pub result: Value,
    /// Hand-written text form; otherwise the JSON is flattened.
    pub text: Option<String>,
}

impl Outcome {
    pub fn new(command: &str, ok: bool, result: Value) -> Self {
        Outcome { command: command.into(), ok, result, text: None }
    }

    pub fn with_text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object()) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::String(s) => {
            let _ = writeln!(out, "{prefix}: {s}");
        }
        other => {
            let _ = writeln!(out, "{prefix}: {other}");
        }
    }
}

pub fn render(outcome: &Outcome, format: Format) -> String {
    match format {
        Format::Json => {
            let envelope = json!({
                "schema_version": SCHEMA_VERSION,
                "command": outcome.command,
                "ok": outcome.ok,
                "result": outcome.result,
            });
            let mut s = serde_json::to_string_pretty(&envelope).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = format!("{} ({})\n", outcome.command, if outcome.ok { "ok" } else { "FAILED" });
            match &outcome.text {
                Some(t) => s.push_str(t),
                None => flatten("", &outcome.result, &mut s),
            }
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    }
}

pub fn emit(outcome: &Outcome, global: &Global) -> Result<(), CliError> {
    let s = render(outcome, global.format);
    match &global.output {
        Some(path) => std::fs::write(path, s).map_err(|e| CliError::Internal(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(s.as_bytes())
            .map_err(|e| CliError::Internal(e.to_string())),
    }
}
