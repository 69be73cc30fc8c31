use std::fmt::Write as _;

use serde::Serialize;

use super::util::{Failure, Outcome};
use super::{CheckKind, IdentityCheck, Mode, Section};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// The points `z` was evaluated at, and the degree bound they exceed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sampling {
    pub degree_bound: usize,
    pub points: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub section: Section,
    pub kind: CheckKind,
    pub bound: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampling: Option<Sampling>,
}

impl CheckResult {
    pub(super) fn new(check: &IdentityCheck, bound: usize, outcome: Outcome, sampling: Option<Sampling>) -> CheckResult {
        let (status, witness) = match outcome {
            Ok(w) => (Status::Pass, w),
            Err(Failure::Mismatch { at, left, right }) => {
                (Status::Fail, Some(format!("{at}: {left} != {right}")))
            }
            Err(Failure::Error(e)) => (Status::Fail, Some(format!("error: {e}"))),
        };
        CheckResult { id: check.id, section: check.section, kind: check.kind, bound, status, witness, sampling }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub order: usize,
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckResult>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

#[derive(Serialize)]
struct Timed<'a> {
    #[serde(flatten)]
    report: &'a Report,
    elapsed_ms: u128,
}

impl Report {
    pub(super) fn new(suite: String, order: usize, mode: Mode, checks: Vec<CheckResult>, elapsed_ms: u128) -> Report {
        let passed = checks.iter().filter(|c| c.status == Status::Pass).count();
        let seed = match mode {
            Mode::Sampled { seed } => Some(seed),
            Mode::Symbolic => None,
        };
        Report { suite, order, mode: mode.name(), seed, passed, failed: checks.len() - passed, checks, elapsed_ms }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    /// Wall time is left out unless asked for, so repeated runs compare
    /// byte for byte.
    pub fn to_json(&self, timings: bool) -> String {
        let out = if timings {
            serde_json::to_string_pretty(&Timed { report: self, elapsed_ms: self.elapsed_ms })
        } else {
            serde_json::to_string_pretty(self)
        };
        out.expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["id", "section", "kind", "bound", "status", "witness"]).expect("in-memory write");
        for c in &self.checks {
            let bound = c.bound.to_string();
            w.write_record([
                c.id,
                c.section.name(),
                c.kind.name(),
                &bound,
                c.status.name(),
                c.witness.as_deref().unwrap_or(""),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_text(&self, timings: bool) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let _ = write!(s, "{} {:<22} {:<16} bound={}", c.status.name().to_uppercase(), c.id, c.kind.name(), c.bound);
            if let Some(w) = &c.witness {
                let _ = write!(s, "  {w}");
            }
            if let Some(sm) = &c.sampling {
                let _ = write!(s, "  [{} points, degree bound {}]", sm.points.len(), sm.degree_bound);
            }
            s.push('\n');
        }
        let _ = write!(
            s,
            "suite {} order {} mode {}: {} passed, {} failed",
            self.suite, self.order, self.mode, self.passed, self.failed
        );
        if timings {
            let _ = write!(s, " in {} ms", self.elapsed_ms);
        }
        s.push('\n');
        s
    }
}
