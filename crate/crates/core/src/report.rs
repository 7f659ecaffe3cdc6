//! JSON-serializable verification reports.

use serde::Serialize;

/// One verified case: closed-form identity, inequality, or normalization.
#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub name: String,
    pub params: String,
    pub grids: Vec<usize>,
    /// Max absolute deviation from the oracle (identity/normalization
    /// suites) or the inequality margin rhs - lhs.
    pub max_error: Option<f64>,
    /// Observed convergence order between the two grid levels.
    pub order: Option<f64>,
    pub holds: bool,
}

/// Effective configuration echoed into every report.
#[derive(Debug, Clone, Serialize)]
pub struct ReportConfig {
    pub grids: Vec<usize>,
    pub seed: Option<u64>,
    pub tol: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub config: ReportConfig,
    pub cases: Vec<CaseReport>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn new(suite: &str, config: ReportConfig, cases: Vec<CaseReport>) -> Self {
        let passed = cases.iter().all(|c| c.holds);
        SuiteReport {
            suite: suite.to_string(),
            config,
            cases,
            passed,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}
