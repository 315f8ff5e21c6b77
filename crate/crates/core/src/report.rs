//! Shared audit-report types: the formula audit and the operator
//! certification serialize entries of the same shape into one stream.

use serde::{Deserialize, Serialize};

pub const AUDIT_SCHEMA: &str = "nkdv.audit/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// The check could not distinguish candidates (e.g. on data where
    /// every candidate evaluates to zero).
    Indeterminate,
}

impl Verdict {
    pub fn from_residual(residual: f64, tol: f64) -> Verdict {
        if residual <= tol {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// One audited item: a formula (or operator identity) at a parameter
/// point, a named variant of it, and the measured residual.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub equation: String,
    pub c: Option<f64>,
    pub g: Option<f64>,
    pub h: Option<f64>,
    pub variant: String,
    pub residual: f64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub schema: &'static str,
    pub entries: Vec<AuditEntry>,
    /// Printed formulas that fail while a corrected variant passes at
    /// the same parameter point.
    pub flags: Vec<String>,
    pub notes: Vec<String>,
}

impl AuditReport {
    /// Render the entry table as CSV (header + one row per entry).
    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("# schema: nkdv.audit-csv/1\nequation,c,g,h,variant,residual,verdict\n");
        for e in &self.entries {
            let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                e.equation,
                opt(e.c),
                opt(e.g),
                opt(e.h),
                e.variant,
                e.residual,
                match e.verdict {
                    Verdict::Pass => "pass",
                    Verdict::Fail => "fail",
                    Verdict::Indeterminate => "indeterminate",
                }
            ));
        }
        out
    }
}
