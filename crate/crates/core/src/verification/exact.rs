use crate::constructions::Family;
use crate::numeric::{special_angle_lookup, QuadExt, Rational, Scalar};
use crate::symbolic::rational_as_i64;

use super::{CheckRecord, CheckStatus, VerificationError, ANGLE_BAND_DEG};

/// Angles at which the summation identity of the ziggurat decomposition is
/// confirmed in the quadratic field.
pub const ZIGGURAT_SPECIAL_ANGLES: [i64; 5] = [60, 90, 108, 120, 135];
/// Angles at which `1/2 − r² cos 2θ = r²` is confirmed exactly.
pub const PYRAMID_SPECIAL_ANGLES: [i64; 3] = [45, 60, 72];

/// Both sides of a special-angle identity, as field elements.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactIdentity {
    pub theta: i64,
    pub lhs: QuadExt,
    pub rhs: QuadExt,
    /// Auxiliary equality the identity rests on, when there is one.
    pub witness: Option<(String, bool)>,
}

impl ExactIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs && self.witness.as_ref().is_none_or(|(_, ok)| *ok)
    }
}

fn sin_exact(deg: i64) -> Result<QuadExt, VerificationError> {
    special_angle_lookup(&Rational::from_integer(deg.into()))
        .sin_exact
        .ok_or_else(|| crate::numeric::NumericError::NoExactTrig(deg.to_string()).into())
}

fn cos_exact(deg: i64) -> Result<QuadExt, VerificationError> {
    special_angle_lookup(&Rational::from_integer(deg.into()))
        .cos_exact
        .ok_or_else(|| crate::numeric::NumericError::NoExactTrig(deg.to_string()).into())
}

fn q(n: i64) -> QuadExt {
    QuadExt::from_int(n)
}

fn op(r: Result<QuadExt, crate::numeric::NumericError>) -> Result<QuadExt, VerificationError> {
    Ok(r?)
}

/// `1 + 4(1 − 2cos θ) sin(270° − θ) + 2 sin(270° − 2θ)` against `2 + (1 − 2cos θ)²`.
pub fn ziggurat_identity(theta: i64) -> Result<ExactIdentity, VerificationError> {
    let k = op(q(1).checked_sub(&op(q(2).checked_mul(&cos_exact(theta)?))?))?;
    let s1 = sin_exact(270 - theta)?;
    let s2 = sin_exact(270 - 2 * theta)?;
    let lhs = op(q(1).checked_add(&op(op(q(4).checked_mul(&k))?.checked_mul(&s1))?))?;
    let lhs = op(lhs.checked_add(&op(q(2).checked_mul(&s2))?))?;
    let rhs = op(q(2).checked_add(&k.pow(2)))?;
    let witness = if theta == 108 {
        let phi = QuadExt::phi();
        let ok = k == phi && phi.pow(2) == op(q(1).checked_add(&phi))?;
        Some(("1 − 2cos 108° = φ and φ² = 1 + φ".to_string(), ok))
    } else {
        None
    };
    Ok(ExactIdentity { theta, lhs, rhs, witness })
}

/// `1/2 − r² cos 2θ` against `r²` with `r = 1/(2cos θ)`.
pub fn pyramid_identity(theta: i64) -> Result<ExactIdentity, VerificationError> {
    let r = op(q(1).checked_div(&op(q(2).checked_mul(&cos_exact(theta)?))?))?;
    let r2 = r.pow(2);
    let half = QuadExt::rational(crate::numeric::rat(1, 2));
    let lhs = op(half.checked_sub(&op(r2.checked_mul(&cos_exact(2 * theta)?))?))?;
    let witness = if theta == 72 {
        Some(("r(72°) = φ".to_string(), r == QuadExt::phi()))
    } else {
        None
    };
    Ok(ExactIdentity { theta, lhs, rhs: r2, witness })
}

/// Integer special angle named by `theta`: exactly in the exact backend,
/// within the angle band in the float backend. Coordinates at 72° and 108°
/// are float only, yet the scalar identity is still decided exactly.
fn special_degree(theta: &Scalar, specials: &[i64]) -> Option<i64> {
    let deg = match theta {
        Scalar::Exact(q) => q.as_rational().and_then(rational_as_i64)?,
        Scalar::Float { value, .. } => {
            let near = value.round();
            if (value - near).abs() > ANGLE_BAND_DEG {
                return None;
            }
            near as i64
        }
    };
    specials.contains(&deg).then_some(deg)
}

/// Confirms the family's identity in the quadratic field when `theta` is
/// one of its special angles; skips otherwise.
pub fn check_exact_special_angle(family: Family, theta: &Scalar) -> Result<CheckRecord, VerificationError> {
    let (specials, claim): (&[i64], &str) = match family {
        Family::Pyramid => (&PYRAMID_SPECIAL_ANGLES, "1/2 − r² cos 2θ = r² holds exactly"),
        _ => (
            &ZIGGURAT_SPECIAL_ANGLES,
            "1 + 4(1 − 2cos θ) sin(270° − θ) + 2 sin(270° − 2θ) = 2 + (1 − 2cos θ)² holds exactly",
        ),
    };
    let rec = CheckRecord::new("exact_special_angle", claim, 0.0);
    let Some(deg) = special_degree(theta, specials) else {
        return Ok(rec.skip("not a special angle"));
    };
    let id = match family {
        Family::Pyramid => pyramid_identity(deg)?,
        _ => ziggurat_identity(deg)?,
    };
    let mut rec = rec
        .value("lhs", id.lhs.to_f64())
        .value("rhs", id.rhs.to_f64())
        .exact(format!("{} = {}", id.lhs, id.rhs));
    if let Some((text, ok)) = &id.witness {
        rec = rec.note(&format!("{text}: {}", if *ok { "confirmed" } else { "refuted" }));
    }
    Ok(rec.status(CheckStatus::from_bool(id.holds())))
}
