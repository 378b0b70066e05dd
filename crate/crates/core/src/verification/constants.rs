use serde::{Serialize, Serializer};

use crate::constructions::{build_pyramid, build_ziggurat, Segment, Side, Ziggurat};
use crate::geometry::Point;
use crate::numeric::{NumericError, Scalar, POINT_TOL};

use super::VerificationError;

/// `(cos θ, sin θ)` in the backend of `theta`.
pub(crate) fn trig_pair(theta: &Scalar) -> Result<(Scalar, Scalar), NumericError> {
    Ok((theta.cos_deg()?, theta.sin_deg()?))
}

/// Angle-dependent constants of the two constructions.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstantsRecord {
    /// Ziggurat area over the squared basis: `sin θ (1 − cos θ)`.
    #[serde(rename = "C_theta", serialize_with = "as_f64")]
    pub c_theta: Scalar,
    /// Measured ratio of the pyramid cut out by the extended legs to the
    /// ziggurat, for `90° < θ < 180°`.
    #[serde(rename = "D_theta", serialize_with = "opt_as_f64")]
    pub d_theta: Option<Scalar>,
    /// Signed top-to-basis ratio `1 − 2cos θ`.
    #[serde(serialize_with = "as_f64")]
    pub similarity_ratio: Scalar,
    /// Pyramid leg-to-basis ratio `1 / (2cos θ)`, for `θ < 90°`.
    #[serde(rename = "r_theta", serialize_with = "opt_as_f64")]
    pub r_theta: Option<Scalar>,
}

fn as_f64<S: Serializer>(v: &Scalar, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(v.to_f64())
}

fn opt_as_f64<S: Serializer>(v: &Option<Scalar>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_some(&v.to_f64()),
        None => s.serialize_none(),
    }
}

/// Evaluates the constants at `theta`, falling back to floats when the exact
/// backend has no closed form for it.
pub fn compute_constants(theta: &Scalar) -> Result<ConstantsRecord, VerificationError> {
    let theta = match trig_pair(theta) {
        Err(NumericError::NoExactTrig(_)) => theta.to_float(POINT_TOL),
        _ => theta.clone(),
    };
    let (cos, sin) = trig_pair(&theta)?;
    let t = theta.to_f64();
    let backend = theta.backend();
    let one = backend.int(1);
    let two = backend.int(2);
    let r_theta = if t > 0.0 && t < 90.0 {
        Some(one.checked_div(&(&two * &cos))?)
    } else {
        None
    };
    let d_theta = if t > 90.0 && t < 180.0 {
        let unit = Segment::new(Point::origin(backend), Point::from_ints(backend, 1, 0));
        let zig = build_ziggurat(unit.clone(), &theta, Side::Left)?;
        let pyr = build_pyramid(unit, &(backend.int(180) - &theta), Side::Right)?;
        Some(pyr.polygon().area().checked_div(&zig.polygon().area())?)
    } else {
        None
    };
    Ok(ConstantsRecord {
        c_theta: &sin * (&one - &cos),
        similarity_ratio: &one - &two * &cos,
        d_theta,
        r_theta,
    })
}

/// Area of the triangle bounded by the basis and the two legs extended
/// past it, or `None` when the legs are parallel.
pub fn extended_pyramid_area(zig: &Ziggurat) -> Option<Scalar> {
    let [p, q, q_top, p_top] = &zig.vertices;
    let d1 = p_top - p;
    let d2 = q_top - q;
    let denom = d1.cross(&d2);
    let parallel = match &denom {
        Scalar::Exact(x) => x.is_zero(),
        Scalar::Float { value, .. } => value.abs() <= POINT_TOL * d1.norm_f64() * d2.norm_f64(),
    };
    if parallel {
        return None;
    }
    let base = q - p;
    let s = base.cross(&d2).checked_div(&denom).ok()?;
    let apex = p + &d1.scale(&s);
    let twice = base.cross(&(&apex - p)).abs();
    Some(twice / denom.backend().int(2))
}
