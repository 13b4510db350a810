//! Verification report shared by the verify operations and the CLI.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub identity: String,
    pub index: i64,
    pub ok: bool,
}

impl CheckResult {
    pub fn new(identity: impl Into<String>, index: i64, ok: bool) -> Self {
        CheckResult {
            identity: identity.into(),
            index,
            ok,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "identity": self.identity,
            "index": self.index,
            "ok": self.ok,
        })
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} (index {})",
            if self.ok { "ok" } else { "FAIL" },
            self.identity,
            self.index
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new() -> Self {
        Report { checks: Vec::new() }
    }

    pub fn push(&mut self, identity: impl Into<String>, index: i64, ok: bool) {
        self.checks.push(CheckResult::new(identity, index, ok));
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.ok)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.checks.iter().map(|c| c.to_json()).collect())
    }
}
