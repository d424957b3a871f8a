//! Tolerance-bearing checks of the sampled objects against their exact
//! covariance structure, grouped into suites with a JSON report.

pub mod checks;
pub mod report;
pub mod stats;
pub mod suites;

pub use checks::*;
pub use report::{CheckResult, Comparison, ReportConfig, VerificationReport, EXACT_TOL};
pub use suites::{run_suite, Suite, SuiteConfig};
