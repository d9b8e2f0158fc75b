//! Structured results for the verification suites: one record per check,
//! machine-readable, with witnesses kept on failure.

use std::time::Duration;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped { reason: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    /// Stable identifier; reports are sorted by it.
    pub id: String,
    /// Human-readable statement of what was checked.
    pub detail: String,
    #[serde(flatten)]
    pub status: CheckStatus,
    /// Failure payload (expected/got values, first witness).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
    #[serde(serialize_with = "ser_duration")]
    pub elapsed: Duration,
}

fn ser_duration<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        VerificationReport { suite: suite.into(), checks }
    }

    pub fn passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| !matches!(c.status, CheckStatus::Fail))
    }

    pub fn merge(reports: Vec<VerificationReport>) -> VerificationReport {
        let mut checks = Vec::new();
        for r in reports {
            for mut c in r.checks {
                c.id = format!("{}/{}", r.suite, c.id);
                checks.push(c);
            }
        }
        VerificationReport::new("all", checks)
    }

    /// Plain-text rendering, one line per check.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match &c.status {
                CheckStatus::Pass => "pass".to_string(),
                CheckStatus::Fail => "FAIL".to_string(),
                CheckStatus::Skipped { reason } => format!("skip ({reason})"),
            };
            out.push_str(&format!(
                "[{tag}] {}: {} ({:.3}s)\n",
                c.id,
                c.detail,
                c.elapsed.as_secs_f64()
            ));
            if let (CheckStatus::Fail, Some(w)) = (&c.status, &c.witness) {
                out.push_str(&format!("       witness: {w}\n"));
            }
        }
        let failed = self
            .checks
            .iter()
            .filter(|c| matches!(c.status, CheckStatus::Fail))
            .count();
        out.push_str(&format!(
            "suite {}: {} checks, {} failed\n",
            self.suite,
            self.checks.len(),
            failed
        ));
        out
    }
}
