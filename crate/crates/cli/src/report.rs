use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

/// Witnesses kept per report.
pub const WITNESS_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum Param {
    Int(i64),
    Text(String),
}

impl std::fmt::Display for Param {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Param::Int(n) => write!(f, "{n}"),
            Param::Text(s) => f.write_str(s),
        }
    }
}

impl From<u32> for Param {
    fn from(n: u32) -> Self {
        Param::Int(n.into())
    }
}

impl From<u64> for Param {
    fn from(n: u64) -> Self {
        Param::Int(n as i64)
    }
}

impl From<&str> for Param {
    fn from(s: &str) -> Self {
        Param::Text(s.to_owned())
    }
}

impl From<String> for Param {
    fn from(s: String) -> Self {
        Param::Text(s)
    }
}

pub type Params = BTreeMap<String, Param>;

/// One mismatch: a point index (Hall checks), a coordinate index (symbolic
/// checks) or a sample number (property checks).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub index: u64,
    pub expected: String,
    pub actual: String,
}

impl Witness {
    pub fn new(index: u64, expected: impl ToString, actual: impl ToString) -> Self {
        Self {
            index,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub check: String,
    pub params: Params,
    pub pass: bool,
    pub witnesses: Vec<Witness>,
    pub runtime_ms: u64,
}

impl Report {
    /// `pass` is derived from the witnesses, which are sorted by index and
    /// truncated to [`WITNESS_LIMIT`].
    pub fn new(check: impl Into<String>, params: Params, mut witnesses: Vec<Witness>, runtime_ms: u64) -> Self {
        witnesses.sort();
        witnesses.truncate(WITNESS_LIMIT);
        Self {
            check: check.into(),
            params,
            pass: witnesses.is_empty(),
            witnesses,
            runtime_ms,
        }
    }

    pub fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Sort by check name, then parameters.
pub fn sort_reports(reports: &mut [Report]) {
    reports.sort_by(|a, b| (&a.check, &a.params).cmp(&(&b.check, &b.params)));
}

/// A table, or one JSON object per line.
pub fn emit_report(reports: &[Report], json: bool) -> String {
    let mut out = String::new();
    if json {
        for r in reports {
            out.push_str(&serde_json::to_string(r).expect("reports serialize"));
            out.push('\n');
        }
        return out;
    }
    if reports.is_empty() {
        return out;
    }
    let rows: Vec<(String, String)> = reports.iter().map(|r| (r.check.clone(), r.params_text())).collect();
    let wc = rows.iter().map(|r| r.0.len()).max().unwrap_or(0).max(5);
    let wp = rows.iter().map(|r| r.1.chars().count()).max().unwrap_or(0).max(6);
    let _ = writeln!(out, "{:<wc$}  {:<wp$}  RESULT  MS", "CHECK", "PARAMS");
    for (r, (check, params)) in reports.iter().zip(&rows) {
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        let pad = wp - params.chars().count();
        let _ = writeln!(out, "{check:<wc$}  {params}{:pad$}  {verdict:<6}  {}", "", r.runtime_ms);
        for w in &r.witnesses {
            let _ = writeln!(out, "    at {}: expected {}, got {}", w.index, w.expected, w.actual);
        }
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    let _ = writeln!(out, "{} checks, {} failed", reports.len(), failed);
    out
}
