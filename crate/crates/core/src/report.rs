//! Structured outcomes of verification scenarios.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Certified,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub name: String,
    pub status: Status,
    pub witness: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub scenario: String,
    pub claims: Vec<Claim>,
    pub timing_ms: u64,
    /// Checks not run because a cap was exceeded.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<String>,
}

impl Report {
    pub fn new(scenario: impl Into<String>) -> Self {
        Self {
            scenario: scenario.into(),
            claims: Vec::new(),
            timing_ms: 0,
            skipped: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, status: Status, witness: Value) {
        self.claims.push(Claim {
            name: name.into(),
            status,
            witness,
        });
    }

    /// Pass when `ok`, fail otherwise.
    pub fn check(&mut self, name: impl Into<String>, ok: bool, witness: Value) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(name, status, witness);
    }

    pub fn certify(&mut self, name: impl Into<String>, certificate: impl Into<String>) {
        self.push(name, Status::Certified, Value::String(certificate.into()));
    }

    pub fn skip(&mut self, what: impl Into<String>) {
        self.skipped.push(what.into());
    }

    /// Adds the claims of `other` with names prefixed by `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for c in other.claims {
            self.claims.push(Claim {
                name: format!("{prefix}/{}", c.name),
                ..c
            });
        }
        self.skipped
            .extend(other.skipped.into_iter().map(|s| format!("{prefix}/{s}")));
    }

    /// Sorts claims by name and records the elapsed time.
    pub fn finish(mut self, started: Instant) -> Self {
        self.claims.sort_by(|a, b| a.name.cmp(&b.name));
        self.skipped.sort();
        self.timing_ms = started.elapsed().as_millis() as u64;
        self
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn claim(&self, name: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("scenario: {}\n", self.scenario);
        for c in &self.claims {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Certified => "certified",
            };
            out.push_str(&format!("  [{status}] {}", c.name));
            match &c.witness {
                Value::Null => {}
                Value::String(s) => out.push_str(&format!(": {s}")),
                w => out.push_str(&format!(": {w}")),
            }
            out.push('\n');
        }
        for s in &self.skipped {
            out.push_str(&format!("  [skipped] {s}\n"));
        }
        out.push_str(&format!("  time: {} ms\n", self.timing_ms));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn claims_sort_and_serialize() {
        let mut r = Report::new("demo");
        r.check("zeta", true, json!({"d": 2}));
        r.certify("alpha", "from the coefficient ring");
        let r = r.finish(Instant::now());
        assert_eq!(r.claims[0].name, "alpha");
        assert!(r.passed());
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["claims"][0]["status"], "certified");
        assert_eq!(v["claims"][1]["status"], "pass");
        assert!(v.get("skipped").is_none());
    }

    #[test]
    fn failures_are_visible() {
        let mut r = Report::new("demo");
        r.check("bad", false, Value::Null);
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        assert!(r.to_text().contains("[FAIL] bad"));
    }
}
