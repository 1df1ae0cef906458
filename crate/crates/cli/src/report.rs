use crate::manifest::Manifest;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Comparison {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = "<")]
    Below,
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = ">")]
    Above,
    #[serde(rename = "==")]
    Equal,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub measured: f64,
    pub comparison: Comparison,
    pub tolerance: f64,
    /// Advisory checks are reported but do not affect the exit status.
    pub advisory: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, measured: f64, comparison: Comparison, tolerance: f64) -> Self {
        let passed = match comparison {
            Comparison::AtMost => measured <= tolerance,
            Comparison::Below => measured < tolerance,
            Comparison::AtLeast => measured >= tolerance,
            Comparison::Above => measured > tolerance,
            Comparison::Equal => measured == tolerance,
        };
        Self {
            name: name.into(),
            passed,
            measured,
            comparison,
            tolerance,
            advisory: false,
        }
    }

    pub fn at_most(name: impl Into<String>, measured: f64, tol: f64) -> Self {
        Self::new(name, measured, Comparison::AtMost, tol)
    }

    pub fn below(name: impl Into<String>, measured: f64, tol: f64) -> Self {
        Self::new(name, measured, Comparison::Below, tol)
    }

    pub fn equal(name: impl Into<String>, measured: f64, expected: f64) -> Self {
        Self::new(name, measured, Comparison::Equal, expected)
    }

    pub fn advisory(mut self) -> Self {
        self.advisory = true;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub manifest: Manifest,
    pub checks: Vec<Check>,
    pub data_files: Vec<String>,
    pub wall_clock_seconds: f64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || c.advisory)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
