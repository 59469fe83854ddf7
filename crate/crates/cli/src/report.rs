use std::collections::BTreeMap;
use std::io::{self, Write};

use qladder_core::checks::CheckResult;
use serde::Serialize;

/// One verification outcome. Fields are declared in the order they print.
#[derive(Serialize)]
pub struct Report {
    pub check: String,
    #[serde(rename = "elapsedMs")]
    pub elapsed_ms: u64,
    pub expected: String,
    pub got: String,
    pub params: BTreeMap<String, String>,
    pub pass: bool,
}

impl Report {
    pub fn from_check(r: CheckResult, elapsed_ms: u64) -> Self {
        Report { check: r.check, elapsed_ms, expected: r.expected, got: r.got, params: r.params, pass: r.pass }
    }
}

pub fn emit(reports: &[Report], json: bool) -> io::Result<()> {
    let mut out = io::stdout().lock();
    for r in reports {
        if json {
            serde_json::to_writer(&mut out, r)?;
            writeln!(out)?;
        } else {
            let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(
                out,
                "{} {} [{}] expected {} got {}",
                if r.pass { "PASS" } else { "FAIL" },
                r.check,
                params.join(" "),
                r.expected,
                r.got
            )?;
        }
    }
    Ok(())
}
