use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{
    cos_deg_f64, rational_to_f64, sin_deg_f64, special_angle_lookup, NumericError, QuadExt,
    Rational, POINT_TOL,
};

/// A number in one of two backends.
///
/// Exact scalars compare by identity. Float scalars carry a tolerance used by
/// [`scalar_eq`] and the `*_within` predicates; arithmetic keeps the larger of
/// the two operand tolerances.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(QuadExt),
    Float { value: f64, tol: f64 },
}

/// Which backend to build new constants in.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Backend {
    Exact,
    Float { tol: f64 },
}

impl Default for Backend {
    fn default() -> Self {
        Backend::Float { tol: POINT_TOL }
    }
}

impl Backend {
    pub fn int(self, n: i64) -> Scalar {
        self.rational(super::int(n))
    }

    pub fn rational(self, r: Rational) -> Scalar {
        match self {
            Backend::Exact => Scalar::Exact(QuadExt::rational(r)),
            Backend::Float { tol } => Scalar::Float {
                value: rational_to_f64(&r),
                tol,
            },
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Backend::Exact)
    }
}

impl Scalar {
    pub fn float(value: f64) -> Self {
        Scalar::Float {
            value,
            tol: POINT_TOL,
        }
    }

    pub fn float_with_tol(value: f64, tol: f64) -> Self {
        Scalar::Float { value, tol }
    }

    pub fn exact(q: QuadExt) -> Self {
        Scalar::Exact(q)
    }

    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Exact(_) => Backend::Exact,
            Scalar::Float { tol, .. } => Backend::Float { tol: *tol },
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&QuadExt> {
        match self {
            Scalar::Exact(q) => Some(q),
            Scalar::Float { .. } => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(q) => q.to_f64(),
            Scalar::Float { value, .. } => *value,
        }
    }

    pub fn tolerance(&self) -> f64 {
        match self {
            Scalar::Exact(_) => 0.0,
            Scalar::Float { tol, .. } => *tol,
        }
    }

    /// The same value moved to the float backend.
    pub fn to_float(&self, tol: f64) -> Scalar {
        Scalar::Float {
            value: self.to_f64(),
            tol,
        }
    }

    pub fn zero_like(&self) -> Scalar {
        self.backend().int(0)
    }

    pub fn one_like(&self) -> Scalar {
        self.backend().int(1)
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Scalar::Exact(_) => true,
            Scalar::Float { value, .. } => value.is_finite(),
        }
    }

    /// Sign without tolerance (exact sign in the exact backend).
    pub fn signum(&self) -> Ordering {
        match self {
            Scalar::Exact(q) => q.signum(),
            Scalar::Float { value, .. } => value.partial_cmp(&0.0).unwrap_or(Ordering::Equal),
        }
    }

    /// Sign with values within `tol · scale` of zero reported as `Equal`.
    /// Exact scalars ignore the tolerance.
    pub fn sign_within(&self, tol: f64, scale: f64) -> Ordering {
        match self {
            Scalar::Exact(q) => q.signum(),
            Scalar::Float { value, .. } => {
                if value.abs() <= tol * scale {
                    Ordering::Equal
                } else if *value > 0.0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    /// Zero test at the scalar's own tolerance relative to `scale`.
    pub fn is_zero_at(&self, scale: f64) -> bool {
        self.sign_within(self.tolerance(), scale.max(1.0)) == Ordering::Equal
    }

    /// Equality within `tol · scale` for floats, identity for exact values.
    pub fn within(&self, other: &Scalar, tol: f64, scale: f64) -> bool {
        match (self, other) {
            (Scalar::Exact(x), Scalar::Exact(y)) => x == y,
            _ => (self.to_f64() - other.to_f64()).abs() <= tol * scale,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(q) => Scalar::Exact(q.abs()),
            Scalar::Float { value, tol } => Scalar::Float {
                value: value.abs(),
                tol: *tol,
            },
        }
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        match self {
            Scalar::Exact(q) => Scalar::Exact(q.pow(exp)),
            Scalar::Float { value, tol } => Scalar::Float {
                value: value.powi(exp as i32),
                tol: *tol,
            },
        }
    }

    /// Square root in the float backend (exact values are converted).
    pub fn sqrt_f64(&self) -> f64 {
        self.to_f64().sqrt()
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar, NumericError> {
        self.combine(rhs, |a, b| a.checked_add(b), |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar, NumericError> {
        self.combine(rhs, |a, b| a.checked_sub(b), |a, b| a - b)
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar, NumericError> {
        self.combine(rhs, |a, b| a.checked_mul(b), |a, b| a * b)
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, NumericError> {
        if let Scalar::Float { value, .. } = rhs {
            if *value == 0.0 {
                return Err(NumericError::DivisionByZero);
            }
        }
        self.combine(rhs, |a, b| a.checked_div(b), |a, b| a / b)
    }

    fn combine(
        &self,
        rhs: &Scalar,
        exact: impl FnOnce(&QuadExt, &QuadExt) -> Result<QuadExt, NumericError>,
        float: impl FnOnce(f64, f64) -> f64,
    ) -> Result<Scalar, NumericError> {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => exact(a, b).map(Scalar::Exact),
            (Scalar::Float { value: a, tol: ta }, Scalar::Float { value: b, tol: tb }) => {
                Ok(Scalar::Float {
                    value: float(*a, *b),
                    tol: ta.max(*tb),
                })
            }
            _ => Err(NumericError::MixedBackends),
        }
    }

    /// Cosine of `self` interpreted as degrees.
    ///
    /// The exact backend requires a rational angle with a tabulated exact
    /// cosine; otherwise [`NumericError::NoExactTrig`] is returned.
    pub fn cos_deg(&self) -> Result<Scalar, NumericError> {
        match self {
            Scalar::Exact(q) => {
                let deg = q.as_rational().ok_or(NumericError::IrrationalAngle)?;
                special_angle_lookup(deg)
                    .cos_exact
                    .map(Scalar::Exact)
                    .ok_or_else(|| NumericError::NoExactTrig(q.to_string()))
            }
            Scalar::Float { value, tol } => Ok(Scalar::Float {
                value: cos_deg_f64(*value),
                tol: *tol,
            }),
        }
    }

    pub fn sin_deg(&self) -> Result<Scalar, NumericError> {
        match self {
            Scalar::Exact(q) => {
                let deg = q.as_rational().ok_or(NumericError::IrrationalAngle)?;
                special_angle_lookup(deg)
                    .sin_exact
                    .map(Scalar::Exact)
                    .ok_or_else(|| NumericError::NoExactTrig(q.to_string()))
            }
            Scalar::Float { value, tol } => Ok(Scalar::Float {
                value: sin_deg_f64(*value),
                tol: *tol,
            }),
        }
    }
}

/// Backend-aware equality.
///
/// Exact scalars: identity. Floats: `|x − y| ≤ tol · max(|scale|, 1)` with
/// `tol` the larger operand tolerance.
pub fn scalar_eq(x: &Scalar, y: &Scalar, scale: &Scalar) -> Result<bool, NumericError> {
    match (x, y) {
        (Scalar::Exact(a), Scalar::Exact(b)) => Ok(a == b),
        (Scalar::Float { value: a, tol: ta }, Scalar::Float { value: b, tol: tb }) => {
            let tol = ta.max(*tb);
            Ok((a - b).abs() <= tol * scale.to_f64().abs().max(1.0))
        }
        _ => Err(NumericError::MixedBackends),
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(q) => Scalar::Exact(-q),
            Scalar::Float { value, tol } => Scalar::Float {
                value: -value,
                tol: *tol,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

// Operators panic on mixed backends or fields; callers building from a single
// `Backend` never mix them.
macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, checked_add);
scalar_binop!(Sub, sub, checked_sub);
scalar_binop!(Mul, mul, checked_mul);
scalar_binop!(Div, div, checked_div);

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(q) => write!(f, "{q}"),
            Scalar::Float { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::int;

    fn ex(q: QuadExt) -> Scalar {
        Scalar::Exact(q)
    }

    #[test]
    fn exact_equality_is_identity() {
        let five_two = ex(QuadExt::new(int(5), int(2), 2).unwrap());
        let three_two = ex(QuadExt::new(int(3), int(2), 2).unwrap());
        let one = Backend::Exact.int(1);
        assert!(scalar_eq(&five_two, &five_two.clone(), &one).unwrap());
        assert!(!scalar_eq(&three_two, &five_two, &one).unwrap());
    }

    #[test]
    fn float_equality_uses_tolerance() {
        let x = Scalar::float_with_tol(1.0, 1e-12);
        let y = Scalar::float_with_tol(1.0 + 1e-15, 1e-12);
        assert!(scalar_eq(&x, &y, &Scalar::float(1.0)).unwrap());
        let far = Scalar::float_with_tol(1.0 + 1e-9, 1e-12);
        assert!(!scalar_eq(&x, &far, &Scalar::float(1.0)).unwrap());
        // relative to a declared scale
        let big = Scalar::float_with_tol(1e6, 1e-12);
        let big2 = Scalar::float_with_tol(1e6 + 1e-7, 1e-12);
        assert!(scalar_eq(&big, &big2, &big).unwrap());
        assert!(!scalar_eq(&big, &big2, &Scalar::float(1.0)).unwrap());
    }

    #[test]
    fn mixed_backends_error() {
        let x = Backend::Exact.int(1);
        let y = Scalar::float(1.0);
        assert_eq!(scalar_eq(&x, &y, &y), Err(NumericError::MixedBackends));
        assert_eq!(x.checked_add(&y), Err(NumericError::MixedBackends));
    }

    #[test]
    fn exact_trig_at_135() {
        let th = Backend::Exact.int(135);
        let c = th.cos_deg().unwrap();
        let s = th.sin_deg().unwrap();
        assert_eq!(&c + &s, Backend::Exact.int(0));
        assert_eq!(&c * &c, ex(QuadExt::rational(crate::numeric::rat(1, 2))));
        assert!(Backend::Exact.int(108).sin_deg().is_err());
        assert!(matches!(
            Backend::Exact.rational(crate::numeric::rat(773, 10)).cos_deg(),
            Err(NumericError::NoExactTrig(_))
        ));
    }

    #[test]
    fn float_arithmetic_keeps_larger_tolerance() {
        let x = Scalar::float_with_tol(2.0, 1e-9);
        let y = Scalar::float_with_tol(3.0, 1e-12);
        assert_eq!(&x * &y, Scalar::float_with_tol(6.0, 1e-9));
    }
}
