//! Run reports shared by the command-line tool and the acceptance suite.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::witness::{AxiomReport, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of_bytes(name: impl Into<String>, bytes: &[u8]) -> Self {
        InputDigest {
            name: name.into(),
            sha256: hex::encode(Sha256::digest(bytes)),
        }
    }
}

/// One named group of identity checks, with scalar results alongside.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub reports: Vec<AxiomReport>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub facts: BTreeMap<String, String>,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            passed: true,
            ..Default::default()
        }
    }

    pub fn push(&mut self, r: AxiomReport) {
        self.passed &= r.holds;
        self.reports.push(r);
    }

    pub fn extend(&mut self, rs: impl IntoIterator<Item = AxiomReport>) {
        for r in rs {
            self.push(r);
        }
    }

    /// Records a yes/no claim; `detail` explains a failure.
    pub fn claim(&mut self, name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) {
        let found = (!ok).then(|| Witness::message(detail()));
        self.push(AxiomReport::from_search(name, found));
    }

    /// Records that a value equals its expected one.
    pub fn expect_eq<T: PartialEq + std::fmt::Display>(&mut self, name: impl Into<String>, got: T, want: T) {
        let name = name.into();
        self.fact(name.clone(), &got);
        self.claim(format!("{name} = {want}"), got == want, || format!("got {got}"));
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl std::fmt::Display) {
        self.facts.insert(key.into(), value.to_string());
    }

    /// Folds an error that stopped a pipeline into a failed claim.
    pub fn absorb<T>(&mut self, step: &str, r: crate::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.claim(step, false, || e.to_string());
                None
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub total_ms: u64,
    #[serde(default)]
    pub per_check_ms: BTreeMap<String, u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub version: String,
    pub inputs: Vec<InputDigest>,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
    pub timing: Timing,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            inputs: Vec::new(),
            passed: true,
            checks: Vec::new(),
            timing: Timing::default(),
        }
    }

    pub fn add_input(&mut self, name: impl Into<String>, bytes: &[u8]) {
        self.inputs.push(InputDigest::of_bytes(name, bytes));
    }

    pub fn add_check(&mut self, check: CheckOutcome, elapsed_ms: Option<u64>) {
        self.passed &= check.passed;
        if let Some(ms) = elapsed_ms {
            self.timing.per_check_ms.insert(check.name.clone(), ms);
        }
        self.checks.push(check);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// The JSON form with the timing field cleared; identical inputs give
    /// identical bytes.
    pub fn stable_json(&self) -> String {
        let mut r = self.clone();
        r.timing = Timing::default();
        r.to_json()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
            for (k, v) in &c.facts {
                let _ = writeln!(out, "    {k}: {v}");
            }
            for r in c.reports.iter().filter(|r| !r.holds) {
                let _ = writeln!(out, "    {r}");
            }
        }
        let _ = writeln!(
            out,
            "{}: {}",
            self.command,
            if self.passed { "all checks passed" } else { "some checks failed" }
        );
        out
    }
}

/// JSON schema for [`RunReport`].
pub const RUN_REPORT_SCHEMA: &str = include_str!("../schema/run_report.schema.json");
