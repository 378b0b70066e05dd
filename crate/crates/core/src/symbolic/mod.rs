//! Trig-identity prover over one angle variable.
//!
//! Expressions are parsed, reduced to a polynomial in `s = sin t` and
//! `c = cos t` using only the whitelisted rules, and compared coefficient-wise.

mod ast;
mod normalize;
mod parser;
mod poly;

use serde::Serialize;
use thiserror::Error;

pub use ast::{LinearAngle, TrigExpr};
pub(crate) use ast::rational_as_i64;
pub use normalize::{normalize, normalize_traced, NormalizeError, Rule, RuleSet};
pub use parser::{parse_identity, parse_trig, ParseError, ParseErrorKind};
pub use poly::BivarPoly;

use crate::numeric::{Scalar, AREA_TOL};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ProverError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("cannot normalize: {0}")]
    Normalize(#[from] NormalizeError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProofReport {
    pub proved: bool,
    pub lhs: String,
    pub rhs: String,
    pub rules_used: Vec<String>,
    pub lhs_normal: BivarPoly,
    pub rhs_normal: BivarPoly,
}

pub fn prove_identity(
    lhs: &TrigExpr,
    rhs: &TrigExpr,
    rules: RuleSet,
) -> Result<ProofReport, ProverError> {
    let (ln, mut fired) = normalize_traced(lhs, rules)?;
    let (rn, rf) = normalize_traced(rhs, rules)?;
    fired.extend(rf);
    Ok(ProofReport {
        proved: ln == rn,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        rules_used: fired.iter().map(|r| r.name().to_string()).collect(),
        lhs_normal: ln,
        rhs_normal: rn,
    })
}

/// Parses `"LHS = RHS"` and proves it.
pub fn prove_text(identity: &str, rules: RuleSet) -> Result<ProofReport, ProverError> {
    let (lhs, rhs) = parse_identity(identity)?;
    prove_identity(&lhs, &rhs, rules)
}

/// `sin t · (1 + cos 2t) = sin 2t · cos t`, the division-free form of the
/// double-angle relation read off the half-angle figure. Float check for
/// `0 < t < 90`.
pub fn verify_double_angle_relation(theta: &Scalar) -> bool {
    let t = theta.to_f64();
    if !(t > 0.0 && t < 90.0) {
        return false;
    }
    let s = crate::numeric::sin_deg_f64(t);
    let c = crate::numeric::cos_deg_f64(t);
    let s2 = crate::numeric::sin_deg_f64(2.0 * t);
    let c2 = crate::numeric::cos_deg_f64(2.0 * t);
    let lhs = s * (1.0 + c2);
    let rhs = s2 * c;
    (lhs - rhs).abs() <= AREA_TOL
}
