//! JSON document shared by the CLI and the HTTP service.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::constructions::{build_configuration, ConfigurationDocument, ConstructionError, DegeneracyRecord, Family, RightTriangle};
use crate::numeric::{rational_to_f64, Backend, NumericError, Rational, Scalar};
use crate::verification::{compute_constants, verify_configuration, ConstantsRecord, VerificationError, VerificationReport};

/// Significant digits kept for every number in serialized output.
pub const JSON_SIGNIFICANT_DIGITS: usize = 15;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Verification(#[from] VerificationError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error("family `{0}` needs legs a and b")]
    MissingLegs(&'static str),
}

/// Inputs of one configuration, as exact rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct ConfigRequest {
    pub family: Family,
    pub a: Rational,
    pub b: Rational,
    pub theta: Rational,
    /// Build in the quadratic field when the angle allows it.
    pub exact: bool,
}

impl ConfigRequest {
    /// Builds the document. In exact mode, angles whose sine leaves every
    /// single quadratic field (72°, 108°) fall back to float coordinates;
    /// their scalar identities are still decided exactly by the report.
    pub fn build(&self) -> Result<ConfigurationDocument, ReportError> {
        if self.exact {
            let backend = Backend::Exact;
            let tri = RightTriangle::new(backend.rational(self.a.clone()), backend.rational(self.b.clone()))?;
            match build_configuration(self.family, &tri, &backend.rational(self.theta.clone())) {
                Err(ConstructionError::Numeric(NumericError::NoExactTrig(_))) => {}
                other => return Ok(other?),
            }
        }
        let tri = RightTriangle::from_f64(rational_to_f64(&self.a), rational_to_f64(&self.b))?;
        Ok(build_configuration(self.family, &tri, &Scalar::float(rational_to_f64(&self.theta)))?)
    }
}

/// Everything a client needs to draw and audit one configuration.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfigResponse {
    pub family: Family,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub theta_degrees: f64,
    pub exact: bool,
    pub named_points: BTreeMap<String, [f64; 2]>,
    pub polygons: BTreeMap<String, Vec<String>>,
    pub areas: BTreeMap<String, f64>,
    pub degeneracy: DegeneracyRecord,
    pub verification: VerificationReport,
    pub constants: ConstantsRecord,
}

impl ConfigResponse {
    pub fn from_document(doc: &ConfigurationDocument) -> Result<Self, ReportError> {
        let mut areas = BTreeMap::new();
        for name in doc.polygons.keys() {
            areas.insert(name.clone(), doc.area(name)?.to_f64());
        }
        Ok(Self {
            family: doc.family,
            a: doc.a.as_ref().map(Scalar::to_f64),
            b: doc.b.as_ref().map(Scalar::to_f64),
            theta_degrees: doc.theta.to_f64(),
            exact: doc.is_exact(),
            named_points: doc
                .points
                .iter()
                .map(|(k, p)| {
                    let (x, y) = p.to_f64();
                    (k.clone(), [x, y])
                })
                .collect(),
            polygons: doc.polygons.clone(),
            areas,
            degeneracy: doc.degeneracy,
            verification: verify_configuration(doc)?,
            constants: compute_constants(&doc.theta)?,
        })
    }

    pub fn from_request(req: &ConfigRequest) -> Result<Self, ReportError> {
        Self::from_document(&req.build()?)
    }
}

/// Rounds a finite float to [`JSON_SIGNIFICANT_DIGITS`] significant digits.
pub fn round_significant(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    let text = format!("{:.*e}", JSON_SIGNIFICANT_DIGITS - 1, v);
    let r: f64 = text.parse().unwrap_or(v);
    // normalize negative zero
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn round_value(v: Value) -> Value {
    match v {
        Value::Number(n) if !(n.is_i64() || n.is_u64()) => n
            .as_f64()
            .and_then(|f| serde_json::Number::from_f64(round_significant(f)))
            .map_or(Value::Null, Value::Number),
        Value::Array(items) => Value::Array(items.into_iter().map(round_value).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, round_value(v))).collect()),
        other => other,
    }
}

/// Machine-stable JSON value: keys sorted, floats rounded.
pub fn to_stable_value<T: Serialize>(value: &T) -> Value {
    round_value(serde_json::to_value(value).expect("report types serialize"))
}

/// Pretty-printed machine-stable JSON text.
pub fn to_stable_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(&to_stable_value(value)).expect("value serializes")
}
