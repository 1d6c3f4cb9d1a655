//! Pass/fail records produced by every check in the crate.

use serde::{Deserialize, Serialize};

use crate::exactlin::{serde_q, vector, Rational};

/// The first failing basis tuple of a check and the nonzero residual found
/// there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub tuple: Vec<usize>,
    #[serde(with = "serde_q::vec")]
    pub residual: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Number of basis tuples examined.
    pub checked: usize,
    /// Number of tuples with nonzero residual.
    pub violations: usize,
    pub first_violation: Option<Violation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckResult {
    pub fn pass(name: &str, note: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            passed: true,
            checked: 0,
            violations: 0,
            first_violation: None,
            note: Some(note.to_string()),
        }
    }

    pub fn verdict(name: &str, passed: bool, note: impl Into<String>) -> Self {
        CheckResult {
            name: name.to_string(),
            passed,
            checked: 1,
            violations: usize::from(!passed),
            first_violation: None,
            note: Some(note.into()),
        }
    }
}

/// Accumulates residuals of one named check over a basis sweep.
///
/// Tuples must be recorded in the order they should be reported; the first
/// nonzero residual is kept.
#[derive(Debug)]
pub struct Sweep {
    name: String,
    checked: usize,
    violations: usize,
    first: Option<Violation>,
}

impl Sweep {
    pub fn new(name: &str) -> Self {
        Sweep {
            name: name.to_string(),
            checked: 0,
            violations: 0,
            first: None,
        }
    }

    pub fn record(&mut self, tuple: &[usize], residual: Vec<Rational>) {
        self.checked += 1;
        if !vector::is_zero(&residual) {
            self.violations += 1;
            if self.first.is_none() {
                self.first = Some(Violation {
                    tuple: tuple.to_vec(),
                    residual,
                });
            }
        }
    }

    pub fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            passed: self.violations == 0,
            checked: self.checked,
            violations: self.violations,
            first_violation: self.first,
            note: None,
        }
    }
}

/// An ordered list of named checks. Passes iff every check passes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, c: CheckResult) {
        self.checks.push(c);
    }

    /// Appends the checks of `other`, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}.{}", c.name);
            }
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Whether the named check exists and passed.
    pub fn passed_check(&self, name: &str) -> bool {
        self.check(name).is_some_and(|c| c.passed)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect()
    }
}

impl FromIterator<CheckResult> for VerificationReport {
    fn from_iter<I: IntoIterator<Item = CheckResult>>(iter: I) -> Self {
        VerificationReport {
            checks: iter.into_iter().collect(),
        }
    }
}
