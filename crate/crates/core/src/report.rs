//! Deterministic run reports shared by the CLI and the fuzz campaigns.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    /// Input name to the first 16 hex digits of its SHA-256.
    pub inputs: BTreeMap<String, String>,
    pub results: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
}

pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().take(8).map(|b| format!("{b:02x}")).collect()
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            inputs: BTreeMap::new(),
            results: BTreeMap::new(),
            checks: Vec::new(),
        }
    }

    pub fn input(&mut self, name: impl Into<String>, bytes: &[u8]) {
        self.inputs.insert(name.into(), digest(bytes));
    }

    pub fn result(&mut self, key: impl Into<String>, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("results serialize");
        self.results.insert(key.into(), v);
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "  input {k}: {v}");
        }
        for (k, v) in &self.results {
            let _ = writeln!(out, "  {k}: {v}");
        }
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                let _ = writeln!(out, "  [{mark}] {}", c.name);
            } else {
                let _ = writeln!(out, "  [{mark}] {} ({})", c.name, c.detail);
            }
        }
        out
    }
}
