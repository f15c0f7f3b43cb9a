//! Pass/fail reports shared by the spectral checks, the acceptance battery
//! and the command-line `verify` command.

mod battery;

pub use battery::{
    center_value_extrapolated, criterion, extended, run_suite, Suite, SuiteOptions, CRITERIA,
};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Check {
    pub id: String,
    pub paper_anchor: String,
    pub status: Status,
    pub measured: Vec<f64>,
    pub expected: Vec<f64>,
    pub tolerance: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            paper_anchor: anchor.into(),
            status: Status::Pass,
            measured: Vec::new(),
            expected: Vec::new(),
            tolerance: 0.0,
            detail: None,
        }
    }

    /// Passes iff `|measured − expected| ≤ tolerance`.
    pub fn close(id: impl Into<String>, anchor: impl Into<String>, measured: f64, expected: f64, tolerance: f64) -> Self {
        let mut c = Self::new(id, anchor);
        c.measured = vec![measured];
        c.expected = vec![expected];
        c.tolerance = tolerance;
        c.status = Status::from_bool((measured - expected).abs() <= tolerance);
        c
    }

    /// Passes iff `|measured − expected| ≤ tolerance·|expected|`.
    pub fn relative(id: impl Into<String>, anchor: impl Into<String>, measured: f64, expected: f64, tolerance: f64) -> Self {
        let mut c = Self::close(id, anchor, measured, expected, tolerance * expected.abs());
        c.tolerance = tolerance;
        c
    }

    pub fn with_status(mut self, ok: bool) -> Self {
        self.status = Status::from_bool(ok);
        self
    }

    pub fn with_values(mut self, measured: Vec<f64>, expected: Vec<f64>, tolerance: f64) -> Self {
        self.measured = measured;
        self.expected = expected;
        self.tolerance = tolerance;
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<BTreeMap<String, String>>,
}

impl VerifyReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), checks: Vec::new(), metadata: None }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerifyReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}
