use std::time::Instant;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

/// What a check computed: whether it held, and the two sides that were
/// compared, already serialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub passed: bool,
    pub expected: String,
    pub actual: String,
}

impl Outcome {
    pub fn compare<T: PartialEq>(expected: &T, actual: &T, show: impl Fn(&T) -> String) -> Self {
        Self {
            passed: expected == actual,
            expected: show(expected),
            actual: show(actual),
        }
    }

    /// Every listed condition must hold; reports the names of those that fail.
    pub fn all(conditions: &[(&str, bool)]) -> Self {
        let failed: Vec<&str> = conditions.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect();
        Self {
            passed: failed.is_empty(),
            expected: conditions.iter().map(|(name, _)| *name).collect::<Vec<_>>().join("; "),
            actual: if failed.is_empty() {
                "all hold".to_string()
            } else {
                format!("fails: {}", failed.join("; "))
            },
        }
    }
}

impl Check {
    pub fn skip(name: &'static str, note: impl Into<String>) -> Self {
        Self {
            name,
            status: Status::Skip,
            expected: String::new(),
            actual: String::new(),
            note: Some(note.into()),
            wall_time_ms: None,
        }
    }

    /// Runs `f`, timing it. An error from `f` is a failure carrying the
    /// error text.
    pub fn run<F>(name: &'static str, f: F) -> Self
    where
        F: FnOnce() -> wheelecc_core::Result<Outcome>,
    {
        let start = Instant::now();
        let result = f();
        let elapsed = start.elapsed().as_secs_f64() * 1e3;
        let wall_time_ms = Some((elapsed * 1e3).round() / 1e3);
        match result {
            Ok(o) => Self {
                name,
                status: if o.passed { Status::Pass } else { Status::Fail },
                expected: o.expected,
                actual: o.actual,
                note: None,
                wall_time_ms,
            },
            Err(e) => Self {
                name,
                status: Status::Fail,
                expected: String::new(),
                actual: String::new(),
                note: Some(e.to_string()),
                wall_time_ms,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }

    pub fn max_wall_time_ms(&self) -> Option<f64> {
        self.checks.iter().filter_map(|c| c.wall_time_ms).reduce(f64::max)
    }

    pub fn strip_timings(&mut self) {
        for c in &mut self.checks {
            c.wall_time_ms = None;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureRef {
    pub n: usize,
    pub check: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub n_min: usize,
    pub n_max: usize,
    pub reports: usize,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_wall_time_ms: Option<f64>,
    pub first_failure: Option<FailureRef>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub reports: Vec<VerificationReport>,
    pub summary: SweepSummary,
}

impl SweepReport {
    pub fn new(n_min: usize, n_max: usize, reports: Vec<VerificationReport>) -> Self {
        let total = |s| reports.iter().map(|r| r.count(s)).sum();
        let summary = SweepSummary {
            n_min,
            n_max,
            reports: reports.len(),
            checks: reports.iter().map(|r| r.checks.len()).sum(),
            passed: total(Status::Pass),
            failed: total(Status::Fail),
            skipped: total(Status::Skip),
            max_wall_time_ms: reports.iter().filter_map(VerificationReport::max_wall_time_ms).reduce(f64::max),
            first_failure: reports
                .iter()
                .find_map(|r| r.first_failure().map(|c| FailureRef { n: r.n, check: c.name })),
        };
        Self { reports, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }
}
