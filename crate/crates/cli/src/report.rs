use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use crate::commands::Outcome;
use crate::CliError;

pub const SCHEMA: u32 = 1;

#[derive(Serialize)]
struct Report<'a> {
    schema: u32,
    command: &'a str,
    inputs: &'a Value,
    seed: Option<u64>,
    results: &'a Value,
    formulas: &'a [&'static str],
    elapsed_ms: Option<u64>,
}

pub fn render(outcome: &Outcome, elapsed_ms: Option<u64>) -> String {
    let report = Report {
        schema: SCHEMA,
        command: outcome.command,
        inputs: &outcome.inputs,
        seed: outcome.seed,
        results: &outcome.results,
        formulas: &outcome.formulas,
        elapsed_ms,
    };
    let mut text = serde_json::to_string_pretty(&report).expect("report values serialize");
    text.push('\n');
    text
}

pub fn write(path: &Path, outcome: &Outcome, elapsed_ms: Option<u64>) -> Result<(), CliError> {
    std::fs::write(path, render(outcome, elapsed_ms))
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}
