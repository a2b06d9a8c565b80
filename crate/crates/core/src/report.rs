//! Verdict types shared by predicates, condition checkers and theorem
//! suites, plus their canonical JSON serialization (stable key order so
//! reports are golden-file testable).

use serde::Serialize;

/// Default cap on recorded witnesses per report.
pub const DEFAULT_WITNESS_CAP: usize = 10;

/// Options threaded through checkers.
#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    pub witness_cap: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            witness_cap: DEFAULT_WITNESS_CAP,
        }
    }
}

/// A concrete violation: the tuple of carrier elements it happened at and
/// the two values that should have agreed, rendered as labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub tuple: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

/// Verdict for one named predicate or condition. `holds` iff no witness
/// exists; `witnesses` carries the lexicographically first violations up
/// to the configured cap. `skipped` is set instead when a prerequisite
/// failed and the check could not run.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionReport {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl ConditionReport {
    pub fn pass(name: &str) -> Self {
        ConditionReport {
            name: name.to_string(),
            holds: true,
            witnesses: Vec::new(),
            skipped: None,
        }
    }

    pub fn fail(name: &str, witnesses: Vec<Witness>) -> Self {
        debug_assert!(!witnesses.is_empty());
        ConditionReport {
            name: name.to_string(),
            holds: false,
            witnesses,
            skipped: None,
        }
    }

    pub fn from_witnesses(name: &str, mut witnesses: Vec<Witness>, cap: usize) -> Self {
        if witnesses.is_empty() {
            Self::pass(name)
        } else {
            witnesses.truncate(cap.max(1));
            Self::fail(name, witnesses)
        }
    }

    pub fn skipped(name: &str, why: &str) -> Self {
        ConditionReport {
            name: name.to_string(),
            holds: false,
            witnesses: Vec::new(),
            skipped: Some(why.to_string()),
        }
    }

    /// First witness rendered as `f(tuple): lhs != rhs`, if any.
    pub fn witness_line(&self) -> Option<String> {
        self.witnesses
            .first()
            .map(|w| format!("at ({}): {} != {}", w.tuple.join(", "), w.lhs, w.rhs))
    }
}

/// Verdict of a single clause inside a theorem suite.
#[derive(Debug, Clone, Serialize)]
pub struct ClauseReport {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl ClauseReport {
    pub fn new(name: &str, holds: bool) -> Self {
        ClauseReport {
            name: name.to_string(),
            holds,
            detail: None,
        }
    }

    pub fn with_detail(name: &str, holds: bool, detail: String) -> Self {
        ClauseReport {
            name: name.to_string(),
            holds,
            detail: Some(detail),
        }
    }
}

/// Outcome of an executable theorem suite. A clause violation while the
/// hypotheses hold contradicts the underlying theorem, so `verdict`
/// distinguishes that hard failure from a vacuous run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteVerdict {
    Passed,
    HypothesesNotMet,
    Failed,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub hypotheses_met: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub hypothesis_notes: Vec<String>,
    pub clauses: Vec<ClauseReport>,
    pub verdict: SuiteVerdict,
}

impl SuiteReport {
    pub fn new(suite: &str, hypotheses_met: bool, notes: Vec<String>, clauses: Vec<ClauseReport>) -> Self {
        let verdict = if !hypotheses_met {
            SuiteVerdict::HypothesesNotMet
        } else if clauses.iter().all(|c| c.holds) {
            SuiteVerdict::Passed
        } else {
            SuiteVerdict::Failed
        };
        SuiteReport {
            suite: suite.to_string(),
            hypotheses_met,
            hypothesis_notes: notes,
            clauses,
            verdict,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == SuiteVerdict::Passed
    }
}
