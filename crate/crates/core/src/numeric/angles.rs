use std::f64::consts::FRAC_1_SQRT_2;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{int, rat, QuadExt, Rational};

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

/// Trigonometric values of an angle given in degrees.
///
/// The exact fields are present when the value lies in a single quadratic
/// extension of the rationals; `sin 72°` and `sin 108°` need nested radicals
/// and only have float values.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecialAngle {
    pub degrees: Rational,
    pub cos_exact: Option<QuadExt>,
    pub sin_exact: Option<QuadExt>,
    pub cos_float: f64,
    pub sin_float: f64,
}

impl SpecialAngle {
    pub fn has_exact_pair(&self) -> bool {
        self.cos_exact.is_some() && self.sin_exact.is_some()
    }
}

/// Exact cosine on the first quadrant table.
fn cos_base(deg: i64) -> Option<QuadExt> {
    let q = |a: Rational, b: Rational, d| QuadExt::new(a, b, d).expect("square-free");
    Some(match deg {
        0 => QuadExt::from_int(1),
        30 => q(int(0), rat(1, 2), 3),
        36 => q(rat(1, 4), rat(1, 4), 5),
        45 => q(int(0), rat(1, 2), 2),
        60 => QuadExt::rational(rat(1, 2)),
        72 => q(rat(-1, 4), rat(1, 4), 5),
        90 => QuadExt::zero(),
        _ => return None,
    })
}

fn exact_cos(degrees: &Rational) -> Option<QuadExt> {
    if !degrees.is_integer() {
        return None;
    }
    let mut x = degrees.to_integer().mod_floor(&BigInt::from(360)).to_i64()?;
    if x > 180 {
        x = 360 - x;
    }
    if x > 90 {
        cos_base(180 - x).map(|c| -c)
    } else {
        cos_base(x)
    }
}

/// Looks up exact cosine and sine for `degrees`.
///
/// Angles are reduced with the unit-circle symmetries, so `108°`, `216°` or
/// `−252°` resolve through the first-quadrant table.
pub fn special_angle_lookup(degrees: &Rational) -> SpecialAngle {
    let cos_exact = exact_cos(degrees);
    let sin_exact = exact_cos(&(int(90) - degrees));
    let deg_f = super::rational_to_f64(degrees);
    let cos_float = cos_exact
        .as_ref()
        .map(QuadExt::to_f64)
        .unwrap_or_else(|| deg_f.to_radians().cos());
    let sin_float = sin_exact
        .as_ref()
        .map(QuadExt::to_f64)
        .unwrap_or_else(|| deg_f.to_radians().sin());
    SpecialAngle {
        degrees: degrees.clone(),
        cos_exact,
        sin_exact,
        cos_float,
        sin_float,
    }
}

/// Cosine of an angle in degrees, exact on multiples of 30° and 45°.
pub fn cos_deg_f64(degrees: f64) -> f64 {
    if degrees.fract() == 0.0 && degrees.abs() < 1e15 {
        let x = (degrees as i64).rem_euclid(360);
        let folded = if x > 180 { 360 - x } else { x };
        let (base, sign) = if folded > 90 {
            (180 - folded, -1.0)
        } else {
            (folded, 1.0)
        };
        let v = match base {
            0 => Some(1.0),
            30 => Some(SQRT3_2),
            45 => Some(FRAC_1_SQRT_2),
            60 => Some(0.5),
            90 => Some(0.0),
            _ => None,
        };
        if let Some(v) = v {
            return sign * v;
        }
    }
    degrees.to_radians().cos()
}

pub fn sin_deg_f64(degrees: f64) -> f64 {
    if degrees.fract() == 0.0 && degrees.abs() < 1e15 {
        return cos_deg_f64(90.0 - degrees);
    }
    degrees.to_radians().sin()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lookup(d: i64) -> SpecialAngle {
        special_angle_lookup(&int(d))
    }

    #[test]
    fn right_angle() {
        let a = lookup(90);
        assert_eq!(a.cos_exact, Some(QuadExt::zero()));
        assert_eq!(a.sin_exact, Some(QuadExt::one()));
    }

    #[test]
    fn cos_36_is_half_golden_mean() {
        let half_phi = &QuadExt::phi() * &QuadExt::rational(rat(1, 2));
        assert_eq!(lookup(36).cos_exact, Some(half_phi));
        assert_eq!(
            lookup(36).cos_exact.unwrap().to_string(),
            "1/4+(1/4)√5"
        );
    }

    #[test]
    fn angle_108_has_exact_cosine_only() {
        let a = lookup(108);
        let expected = QuadExt::new(rat(1, 4), rat(-1, 4), 5).unwrap();
        assert_eq!(a.cos_exact, Some(expected.clone()));
        // cos 108° = −1/(2φ)
        let two_phi = &QuadExt::phi() * &QuadExt::from_int(2);
        assert_eq!(expected, -(QuadExt::one() / two_phi));
        assert_eq!(a.sin_exact, None);
        assert!((a.sin_float - 108f64.to_radians().sin()).abs() < 1e-15);
    }

    #[test]
    fn sin_18_is_inverse_double_golden_mean() {
        let a = lookup(18);
        assert!(a.cos_exact.is_none());
        let two_phi = &QuadExt::phi() * &QuadExt::from_int(2);
        assert_eq!(a.sin_exact, Some(QuadExt::one() / two_phi));
    }

    #[test]
    fn table_coverage_and_float_agreement() {
        for d in [18, 30, 36, 45, 60, 72, 90, 108, 120, 135, 150, 144, 216, 270, -45, 405] {
            let a = lookup(d);
            let rad = (d as f64).to_radians();
            assert!(a.cos_exact.is_some() || a.sin_exact.is_some(), "{d}");
            if let Some(c) = &a.cos_exact {
                assert!((c.to_f64() - rad.cos()).abs() <= 1e-15, "cos {d}");
            }
            if let Some(s) = &a.sin_exact {
                assert!((s.to_f64() - rad.sin()).abs() <= 1e-15, "sin {d}");
            }
        }
    }

    #[test]
    fn non_special_angle_has_float_only() {
        let a = special_angle_lookup(&rat(773, 10));
        assert!(a.cos_exact.is_none() && a.sin_exact.is_none());
        assert!((a.cos_float - 77.3f64.to_radians().cos()).abs() < 1e-15);
    }

    #[test]
    fn float_fast_path() {
        assert_eq!(cos_deg_f64(90.0), 0.0);
        assert_eq!(cos_deg_f64(120.0), -0.5);
        assert_eq!(sin_deg_f64(180.0), 0.0);
        assert_eq!(cos_deg_f64(-60.0), 0.5);
        for d in 0..720 {
            let x = d as f64 * 0.5;
            assert!((cos_deg_f64(x) - x.to_radians().cos()).abs() < 1e-15);
            assert!((sin_deg_f64(x) - x.to_radians().sin()).abs() < 1e-15);
        }
    }
}
