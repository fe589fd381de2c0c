//! Command reports: a human-readable rendering and a canonical JSON form.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use novikov_core::algebra::TruncatedSeries;
use novikov_core::complexes::Torsion;

use crate::error::CliError;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Hex SHA-256 of the command input (file bytes or argument text).
pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// The `±t^k` factor stripped from a torsion to land in `W`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Normalization {
    pub sign: i8,
    pub shift: i64,
}

/// A truncated series with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesOut {
    /// Exponent of `coeffs[0]`.
    pub low: i64,
    /// Known modulo `t^order`.
    pub order: i64,
    pub coeffs: Vec<String>,
    pub text: String,
    pub integral: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalization: Option<Normalization>,
    /// Exact rational function the series expands, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

impl SeriesOut {
    pub fn new(s: &TruncatedSeries) -> Self {
        let low = s.min_degree().min(0);
        let coeffs = (low..s.order()).map(|d| s.coeff(d).to_string()).collect();
        SeriesOut { low, order: s.order(), coeffs, text: s.render(), integral: s.is_integral(), normalization: None, exact: None }
    }

    pub fn torsion(t: &Torsion, n: i64) -> Self {
        let mut out = Self::new(&t.expand(n));
        out.normalization = Some(Normalization { sign: t.sign, shift: t.shift });
        out.exact = Some(t.normalized.to_string());
        out
    }

    pub fn with_exact(mut self, exact: impl ToString) -> Self {
        self.exact = Some(exact.to_string());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Value {
    Series(SeriesOut),
    Integers(Vec<String>),
    Ranks(Vec<usize>),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Item {
    pub name: String,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorOut {
    pub path: String,
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub input_sha256: String,
    pub results: Vec<Item>,
    pub verdicts: Vec<Verdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorOut>,
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: Vec<String>, input_sha256: String) -> Self {
        Report { command, input_sha256, results: Vec::new(), verdicts: Vec::new(), error: None, exit_code: EXIT_PASS }
    }

    pub fn push(&mut self, name: impl Into<String>, value: Value) {
        self.results.push(Item { name: name.into(), value });
    }

    pub fn series(&mut self, name: impl Into<String>, s: SeriesOut) {
        self.push(name, Value::Series(s));
    }

    pub fn verdict(&mut self, check: impl Into<String>, pass: bool, detail: Option<String>) {
        self.verdicts.push(Verdict { check: check.into(), pass, detail });
    }

    pub fn fail_with(&mut self, e: &CliError) {
        self.error = Some(ErrorOut { path: e.path().to_string(), kind: e.kind().to_string(), message: e.detail() });
    }

    /// Settles `exit_code`: 2 on error, 1 when some verdict failed, else 0.
    pub fn finish(mut self) -> Self {
        self.exit_code = if self.error.is_some() {
            EXIT_INPUT
        } else if self.verdicts.iter().all(|v| v.pass) {
            EXIT_PASS
        } else {
            EXIT_FAIL
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.exit_code == EXIT_PASS
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn find(&self, name: &str) -> Option<&Value> {
        self.results.iter().find(|i| i.name == name).map(|i| &i.value)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "$ novikov {}", self.command.join(" "));
        let _ = writeln!(out, "input sha256 {}", self.input_sha256);
        for item in &self.results {
            match &item.value {
                Value::Series(s) => {
                    let _ = write!(out, "{} = {}", item.name, s.text);
                    if let Some(e) = &s.exact {
                        let _ = write!(out, "  [{e}]");
                    }
                    if let Some(n) = &s.normalization {
                        let sign = if n.sign < 0 { "-" } else { "" };
                        let _ = write!(out, "  (stripped {sign}t^{})", n.shift);
                    }
                    let _ = writeln!(out, "{}", if s.integral { "" } else { "  NOT INTEGRAL" });
                }
                Value::Integers(v) => {
                    let _ = writeln!(out, "{} = [{}]", item.name, v.join(", "));
                }
                Value::Ranks(v) => {
                    let v: Vec<String> = v.iter().map(usize::to_string).collect();
                    let _ = writeln!(out, "{} = ({})", item.name, v.join(", "));
                }
                Value::Text(t) => {
                    let _ = writeln!(out, "{}: {t}", item.name);
                }
            }
        }
        for v in &self.verdicts {
            let _ = write!(out, "{} {}", if v.pass { "PASS" } else { "FAIL" }, v.check);
            if let Some(d) = &v.detail {
                let _ = write!(out, ": {d}");
            }
            out.push('\n');
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error at {}: {}: {}", e.path, e.kind, e.message);
        }
        let _ = writeln!(out, "exit {}", self.exit_code);
        out
    }
}
