//! Verification reports: append-only lists of named checks.

use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Recorded for audit; does not affect the outcome.
    Info,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub inputs: serde_json::Value,
    pub expected: String,
    pub actual: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub records: Vec<CheckRecord>,
    pub pass: bool,
    pub seconds: f64,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            records: Vec::new(),
            pass: true,
            seconds: 0.0,
        }
    }

    pub fn push(&mut self, record: CheckRecord) {
        if record.verdict == Verdict::Fail {
            self.pass = false;
        }
        self.records.push(record);
    }

    /// Records a binding check comparing two displayable values.
    pub fn check<T: PartialEq + std::fmt::Display>(
        &mut self,
        name: impl Into<String>,
        inputs: serde_json::Value,
        expected: &T,
        actual: &T,
    ) -> bool {
        let ok = expected == actual;
        self.push(CheckRecord {
            name: name.into(),
            inputs,
            expected: expected.to_string(),
            actual: actual.to_string(),
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        });
        ok
    }

    /// Records a binding yes/no check.
    pub fn assert(&mut self, name: impl Into<String>, inputs: serde_json::Value, ok: bool, detail: impl Into<String>) {
        self.push(CheckRecord {
            name: name.into(),
            inputs,
            expected: "true".into(),
            actual: if ok { "true".into() } else { format!("false: {}", detail.into()) },
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        });
    }

    /// Records a non-binding observation.
    pub fn info(&mut self, name: impl Into<String>, inputs: serde_json::Value, expected: String, actual: String) {
        self.push(CheckRecord {
            name: name.into(),
            inputs,
            expected,
            actual,
            verdict: Verdict::Info,
        });
    }

    /// Appends the records of another report, prefixing their names.
    pub fn absorb(&mut self, other: VerificationReport) {
        for mut r in other.records {
            r.name = format!("{}/{}", other.suite, r.name);
            self.push(r);
        }
        self.seconds += other.seconds;
    }

    pub fn set_elapsed(&mut self, elapsed: Duration) {
        self.seconds = elapsed.as_secs_f64();
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> + '_ {
        self.records.iter().filter(|r| r.verdict == Verdict::Fail)
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.records.iter().filter(|r| r.verdict == verdict).count()
    }

    /// Human-readable summary: counts plus every failure.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "suite {}: {} ({} passed, {} failed, {} informational, {:.2}s)",
            self.suite,
            if self.pass { "PASS" } else { "FAIL" },
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::Info),
            self.seconds
        );
        for r in self.failures() {
            let _ = writeln!(out, "  FAIL {}: expected {}, got {}", r.name, r.expected, r.actual);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn outcome_tracks_failures_only() {
        let mut r = VerificationReport::new("t");
        r.check("a", json!({}), &1, &1);
        r.info("b", json!({}), "x".into(), "y".into());
        assert!(r.pass);
        r.check("c", json!({"n": 2}), &1, &2);
        assert!(!r.pass);
        assert_eq!(r.failures().count(), 1);
        assert!(r.summary().contains("FAIL c: expected 1, got 2"));
    }

    #[test]
    fn json_roundtrip() {
        let mut r = VerificationReport::new("t");
        r.check("a", json!({"n": 3}), &"q", &"q");
        let s = serde_json::to_string(&r).unwrap();
        let back: VerificationReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
