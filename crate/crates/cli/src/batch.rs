//! Line-delimited JSON batches: one request per line, one result per line,
//! then a summary.

use std::io::{BufRead, Write};

use serde::Serialize;

use crate::request::{Executor, Request, Response, Verdict};

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Summary {
    pub records: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

impl Summary {
    /// 2 if any record failed, else 1 if any line was malformed, else 0.
    pub fn exit_code(&self) -> u8 {
        if self.failed > 0 {
            2
        } else if self.errors > 0 {
            1
        } else {
            0
        }
    }
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} records, {} passed, {} failed, {} errors",
            self.records, self.passed, self.failed, self.errors
        )
    }
}

#[derive(Serialize)]
struct ResultLine<'a> {
    line: usize,
    passed: bool,
    #[serde(flatten)]
    response: &'a Response,
}

#[derive(Serialize)]
struct ErrorLine<'a> {
    line: usize,
    error: &'a str,
}

/// Runs every non-blank line of `input`, writing results to `out`.
pub fn run(executor: &Executor, input: impl BufRead, mut out: impl Write) -> std::io::Result<Summary> {
    let mut summary = Summary::default();
    for (index, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let number = index + 1;
        summary.records += 1;
        let result = serde_json::from_str::<Request>(&line)
            .map_err(|e| e.to_string())
            .and_then(|req| executor.execute(&req).map_err(|e| e.to_string()));
        let rendered = match result {
            Ok(outcome) => {
                let passed = outcome.verdict == Verdict::Pass;
                if passed {
                    summary.passed += 1;
                } else {
                    summary.failed += 1;
                }
                serde_json::to_string(&ResultLine {
                    line: number,
                    passed,
                    response: &outcome.response,
                })
            }
            Err(error) => {
                summary.errors += 1;
                eprintln!("line {number}: {error}");
                serde_json::to_string(&ErrorLine {
                    line: number,
                    error: &error,
                })
            }
        };
        writeln!(out, "{}", rendered.expect("results serialize"))?;
    }
    writeln!(out, "{summary}")?;
    Ok(summary)
}
