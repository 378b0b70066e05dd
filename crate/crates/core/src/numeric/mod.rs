//! Exact and floating arithmetic shared by the rest of the crate.
//!
//! Exact values live in a single quadratic extension `Q(√d)` ([`QuadExt`]);
//! floating values carry the comparison tolerance they were created with.
//! [`Scalar`] wraps both so that geometry and constructions can be written
//! once and run in either backend.

mod angles;
mod quad;
mod scalar;

pub use angles::{cos_deg_f64, sin_deg_f64, special_angle_lookup, SpecialAngle};
pub use quad::{quad_add, quad_div, quad_mul, quad_sub, QuadExt};
pub use scalar::{scalar_eq, Backend, Scalar};

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

/// Arbitrary-precision rational; always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Relative tolerance for area identities in the float backend.
pub const AREA_TOL: f64 = 1e-9;
/// Tolerance for point and vector coincidence in the float backend.
pub const POINT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("operands live in different quadratic fields Q(√{0}) and Q(√{1})")]
    MixedFields(u64, u64),
    #[error("cannot mix exact and floating scalars in one operation")]
    MixedBackends,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a square-free positive integer")]
    NotSquareFree(u64),
    #[error("no exact value for the trigonometric function at {0}°")]
    NoExactTrig(String),
    #[error("angle must be rational in the exact backend")]
    IrrationalAngle,
    #[error("invalid number literal `{0}`")]
    BadLiteral(String),
    #[error("non-finite value")]
    NonFinite,
}

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"135"`, `"-77.3"`, `"540/4"` or `"1/2"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational, NumericError> {
    let bad = || NumericError::BadLiteral(text.to_string());
    let s = text.trim();
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = parse_rational(num)?;
        let den = parse_rational(den)?;
        if den.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        return Ok(num / den);
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let numer: BigInt = digits.parse().map_err(|_| bad())?;
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    let value = Rational::new(numer, denom);
    Ok(if neg { -value } else { value })
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational equal to a finite `f64`.
pub fn rational_from_f64(x: f64) -> Result<Rational, NumericError> {
    Rational::from_float(x).ok_or(NumericError::NonFinite)
}

pub(crate) fn is_square_free(d: u64) -> bool {
    if d == 0 {
        return false;
    }
    let mut n = d;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        if n.is_multiple_of(p) {
            n /= p;
        }
        p += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals_and_fractions() {
        assert_eq!(parse_rational("135").unwrap(), int(135));
        assert_eq!(parse_rational("77.3").unwrap(), rat(773, 10));
        assert_eq!(parse_rational("540/4").unwrap(), int(135));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn square_free() {
        assert!(is_square_free(2));
        assert!(is_square_free(5));
        assert!(is_square_free(30));
        assert!(!is_square_free(8));
        assert!(!is_square_free(18));
        assert!(!is_square_free(0));
    }
}
