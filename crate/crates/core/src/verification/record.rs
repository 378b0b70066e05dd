use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::constructions::{ConfigurationDocument, Family};
use crate::numeric::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    DegenerateSkip,
    /// The kernel contradicts a printed formula while the corrected one holds.
    Discrepancy,
}

impl CheckStatus {
    pub fn label(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::DegenerateSkip => "degenerate-skip",
            CheckStatus::Discrepancy => "discrepancy",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    /// Statement being checked.
    pub claim: String,
    pub status: CheckStatus,
    pub values: BTreeMap<String, f64>,
    /// Exact equalities, as `lhs = rhs` in the quadratic field.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn new(name: &str, claim: &str, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            claim: claim.to_string(),
            status: CheckStatus::Pass,
            values: BTreeMap::new(),
            exact: None,
            tolerance,
            note: None,
        }
    }

    pub fn value(mut self, key: &str, v: f64) -> Self {
        self.values.insert(key.to_string(), v);
        self
    }

    pub fn scalar(self, key: &str, v: &Scalar) -> Self {
        self.value(key, v.to_f64())
    }

    pub fn status(mut self, s: CheckStatus) -> Self {
        self.status = s;
        self
    }

    pub fn passed_if(self, ok: bool) -> Self {
        self.status(CheckStatus::from_bool(ok))
    }

    pub fn skip(self, why: &str) -> Self {
        self.status(CheckStatus::DegenerateSkip).note(why)
    }

    pub fn note(mut self, text: &str) -> Self {
        self.note = Some(text.to_string());
        self
    }

    pub fn exact(mut self, text: String) -> Self {
        self.exact = Some(text);
        self
    }

    /// Pass, discrepancy and skip are all acceptable outcomes.
    pub fn is_ok(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub family: Family,
    pub theta: f64,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub exact: bool,
    pub checks: Vec<CheckRecord>,
    pub all_passed: bool,
}

impl VerificationReport {
    pub fn new(doc: &ConfigurationDocument, checks: Vec<CheckRecord>) -> Self {
        let all_passed = checks.iter().all(CheckRecord::is_ok);
        Self {
            family: doc.family,
            theta: doc.theta.to_f64(),
            a: doc.a.as_ref().map(Scalar::to_f64),
            b: doc.b.as_ref().map(Scalar::to_f64),
            exact: doc.is_exact(),
            checks,
            all_passed,
        }
    }

    pub fn get(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.is_ok())
    }

    /// Fixed-width table: one row per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "family {}  theta {}°", self.family.name(), fmt_num(self.theta));
        if let (Some(a), Some(b)) = (self.a, self.b) {
            let _ = write!(out, "  a {}  b {}", fmt_num(a), fmt_num(b));
        }
        if self.exact {
            out.push_str("  (exact)");
        }
        out.push('\n');
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
        let _ = writeln!(out, "{:<width$}  {:<15}  details", "check", "status");
        for c in &self.checks {
            let mut detail: Vec<String> = c
                .values
                .iter()
                .map(|(k, v)| format!("{k}={}", fmt_num(*v)))
                .collect();
            if let Some(e) = &c.exact {
                detail.push(format!("exact: {e}"));
            }
            if let Some(n) = &c.note {
                detail.push(format!("({n})"));
            }
            let _ = writeln!(out, "{:<width$}  {:<15}  {}", c.name, c.status.label(), detail.join("  "));
        }
        let _ = writeln!(out, "result: {}", if self.all_passed { "ok" } else { "FAILED" });
        out
    }
}

fn fmt_num(v: f64) -> String {
    if v == v.trunc() && v.abs() < 1e12 {
        format!("{}", v as i64)
    } else if v.abs() >= 1e-4 && v.abs() < 1e6 {
        let s = format!("{v:.10}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        format!("{v:.6e}")
    }
}
