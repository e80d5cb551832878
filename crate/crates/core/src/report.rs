//! Machine-readable verification results.
//!
//! Reports serialize to canonical JSON (sorted keys) so identical runs are
//! byte-identical.

use serde::Serialize;

/// One named boolean claim, with a short human-readable anchor describing
/// what was checked.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: &str, anchor: &str, pass: bool) -> Check {
        Check { name: name.to_string(), anchor: anchor.to_string(), pass, detail: None }
    }

    pub fn with_detail(name: &str, anchor: &str, pass: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.to_string(),
            anchor: anchor.to_string(),
            pass,
            detail: Some(detail.into()),
        }
    }
}

/// Outcome of auditing one printed closed-form equation against the
/// constructive pipeline. Mismatches are findings, not failures.
#[derive(Debug, Clone, Serialize)]
pub struct AuditEntry {
    pub eq: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constructed: Option<String>,
}

impl AuditEntry {
    pub fn matched(eq: &str) -> AuditEntry {
        AuditEntry { eq: eq.to_string(), status: "match".to_string(), printed: None, constructed: None }
    }

    pub fn mismatch(eq: &str, printed: String, constructed: String) -> AuditEntry {
        AuditEntry {
            eq: eq.to_string(),
            status: "mismatch".to_string(),
            printed: Some(printed),
            constructed: Some(constructed),
        }
    }

    pub fn is_match(&self) -> bool {
        self.status == "match"
    }
}

/// Verification result for one constructed instance.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub instance: serde_json::Value,
    pub backend: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub audit: Vec<AuditEntry>,
}

impl CheckReport {
    pub fn new(instance: serde_json::Value, backend: &str) -> CheckReport {
        CheckReport { instance, backend: backend.to_string(), checks: Vec::new(), audit: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Aggregate over a seeded batch of instances.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub backend: String,
    pub instance_count: usize,
    pub passed: bool,
    pub reports: Vec<IndexedReport>,
    /// Instances with at least one failing check, duplicated here so a
    /// failure dump is self-contained.
    pub counterexamples: Vec<serde_json::Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IndexedReport {
    pub index: usize,
    #[serde(flatten)]
    pub report: CheckReport,
}

impl SuiteReport {
    pub fn assemble(suite: &str, seed: u64, backend: &str, reports: Vec<CheckReport>) -> SuiteReport {
        let counterexamples = reports
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.instance.clone())
            .collect();
        let passed = reports.iter().all(|r| r.passed());
        SuiteReport {
            suite: suite.to_string(),
            seed,
            backend: backend.to_string(),
            instance_count: reports.len(),
            passed,
            reports: reports
                .into_iter()
                .enumerate()
                .map(|(index, report)| IndexedReport { index, report })
                .collect(),
            counterexamples,
        }
    }
}

/// Canonical JSON: routed through `serde_json::Value`, whose object maps are
/// ordered, so keys come out sorted and output is deterministic.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("report serialization");
    let mut s = serde_json::to_string_pretty(&v).expect("report serialization");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_json_sorts_keys() {
        #[derive(Serialize)]
        struct Demo {
            zulu: u32,
            alpha: u32,
        }
        let s = to_canonical_json(&Demo { zulu: 1, alpha: 2 });
        assert!(s.find("alpha").unwrap() < s.find("zulu").unwrap());
    }
}
