use serde::ser::Error as _;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::error::Result;

/// Tolerance used by checks whose exact answer is zero.
pub const EXACT_TOL: f64 = 1e-12;

/// How a check compares its statistic with the expected value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    /// `|statistic - expected| <= tolerance`.
    AbsDiff,
    /// `statistic >= expected`; the tolerance is not used and reported as 0.
    AtLeast,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    #[serde(serialize_with = "sig17")]
    pub statistic: f64,
    #[serde(serialize_with = "sig17")]
    pub expected: f64,
    #[serde(serialize_with = "sig17")]
    pub tolerance: f64,
    pub pass: bool,
    pub detail: String,
    pub comparison: Comparison,
}

impl CheckResult {
    pub fn within(
        name: impl Into<String>,
        statistic: f64,
        expected: f64,
        tolerance: f64,
        detail: impl Into<String>,
    ) -> Self {
        CheckResult {
            name: name.into(),
            statistic,
            expected,
            tolerance,
            pass: (statistic - expected).abs() <= tolerance,
            detail: detail.into(),
            comparison: Comparison::AbsDiff,
        }
    }

    pub fn at_least(name: impl Into<String>, statistic: f64, lower: f64, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            statistic,
            expected: lower,
            tolerance: 0.0,
            pass: statistic >= lower,
            detail: detail.into(),
            comparison: Comparison::AtLeast,
        }
    }

    pub fn abs_error(&self) -> f64 {
        (self.statistic - self.expected).abs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReportConfig {
    #[serde(rename = "N")]
    pub trunc: usize,
    #[serde(rename = "M")]
    pub grid: usize,
    #[serde(rename = "R")]
    pub reps: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub config: ReportConfig,
    pub checks: Vec<CheckResult>,
    pub overall_pass: bool,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, config: ReportConfig, checks: Vec<CheckResult>) -> Self {
        let overall_pass = checks.iter().all(|c| c.pass);
        VerificationReport {
            suite: suite.into(),
            config,
            checks,
            overall_pass,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Floats as JSON numbers with 17 significant digits; non-finite values
/// become `null`.
fn sig17<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    let text = if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    };
    RawValue::from_string(text).map_err(S::Error::custom)?.serialize(s)
}
