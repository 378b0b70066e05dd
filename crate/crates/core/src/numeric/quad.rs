use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{is_square_free, rational_to_f64, NumericError, Rational};

/// An element `a + b·√d` of the quadratic field `Q(√d)`.
///
/// `d` is square-free. Pure rationals are stored with `d = 1` and `b = 0`,
/// and combine with elements of any field; two irrational elements of
/// different fields cannot be combined.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: u64,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: u64) -> Result<Self, NumericError> {
        if !is_square_free(d) {
            return Err(NumericError::NotSquareFree(d));
        }
        if d == 1 {
            return Ok(Self::rational(a + b));
        }
        Ok(Self { a, b, d }.normalized())
    }

    pub fn rational(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
            d: 1,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(super::int(n))
    }

    /// `√d` itself.
    pub fn sqrt(d: u64) -> Result<Self, NumericError> {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    /// The golden mean `(1 + √5)/2`.
    pub fn phi() -> Self {
        Self {
            a: super::rat(1, 2),
            b: super::rat(1, 2),
            d: 5,
        }
    }

    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_coeff(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    fn normalized(mut self) -> Self {
        if self.b.is_zero() {
            self.d = 1;
        }
        self
    }

    fn common_field(&self, other: &Self) -> Result<u64, NumericError> {
        match (self.d, other.d) {
            (1, d) | (d, 1) => Ok(d),
            (x, y) if x == y => Ok(x),
            (x, y) => Err(NumericError::MixedFields(x, y)),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, NumericError> {
        let d = self.common_field(other)?;
        Ok(Self {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d,
        }
        .normalized())
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, NumericError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, NumericError> {
        let d = self.common_field(other)?;
        let dr = Rational::from_integer(d.into());
        Ok(Self {
            a: &self.a * &other.a + &self.b * &other.b * dr,
            b: &self.a * &other.b + &self.b * &other.a,
            d,
        }
        .normalized())
    }

    /// Field norm `a² − d·b²`; zero only for the zero element.
    pub fn norm(&self) -> Rational {
        let dr = Rational::from_integer(self.d.into());
        &self.a * &self.a - &self.b * &self.b * dr
    }

    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d,
        }
    }

    pub fn checked_recip(&self) -> Result<Self, NumericError> {
        if self.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conjugate();
        Ok(Self {
            a: c.a / &n,
            b: c.b / n,
            d: self.d,
        }
        .normalized())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, NumericError> {
        self.common_field(other)?;
        self.checked_mul(&other.checked_recip()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact sign of `a + b√d`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        match (sa, sb) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (x, y) if x == y => x,
            (x, y) => {
                let dr = Rational::from_integer(self.d.into());
                let a2 = &self.a * &self.a;
                let b2d = &self.b * &self.b * dr;
                if a2 > b2d {
                    x
                } else {
                    y
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = rational_to_f64(&self.a);
        if self.b.is_zero() {
            return a;
        }
        a + rational_to_f64(&self.b) * (self.d as f64).sqrt()
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.checked_sub(other).ok().map(|diff| diff.signum())
    }
}

pub fn quad_add(x: &QuadExt, y: &QuadExt) -> Result<QuadExt, NumericError> {
    x.checked_add(y)
}

pub fn quad_sub(x: &QuadExt, y: &QuadExt) -> Result<QuadExt, NumericError> {
    x.checked_sub(y)
}

pub fn quad_mul(x: &QuadExt, y: &QuadExt) -> Result<QuadExt, NumericError> {
    x.checked_mul(y)
}

pub fn quad_div(x: &QuadExt, y: &QuadExt) -> Result<QuadExt, NumericError> {
    x.checked_div(y)
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -&self.a,
            b: -&self.b,
            d: self.d,
        }
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

// Operator forms panic on mixed fields; use the `checked_*` methods where
// operands may come from different fields.
macro_rules! quad_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                (&self).$method(rhs)
            }
        }
    };
}

quad_binop!(Add, add, checked_add);
quad_binop!(Sub, sub, checked_sub);
quad_binop!(Mul, mul, checked_mul);
quad_binop!(Div, div, checked_div);

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for QuadExt {
    /// `5+2√2`, `1/4-(1/4)√5`, `-√2`, `3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return f.write_str(&fmt_rational(&self.a));
        }
        let mut out = String::new();
        if !self.a.is_zero() {
            out.push_str(&fmt_rational(&self.a));
            out.push(if self.b.is_negative() { '-' } else { '+' });
        } else if self.b.is_negative() {
            out.push('-');
        }
        let mag = self.b.abs();
        if !mag.is_one() {
            if mag.is_integer() {
                out.push_str(&fmt_rational(&mag));
            } else {
                out.push_str(&format!("({})", fmt_rational(&mag)));
            }
        }
        out.push_str(&format!("√{}", self.d));
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat};
    use proptest::prelude::*;

    fn q(a: Rational, b: Rational, d: u64) -> QuadExt {
        QuadExt::new(a, b, d).unwrap()
    }

    #[test]
    fn one_plus_root_two_squared() {
        let x = q(int(1), int(1), 2);
        assert_eq!(&x * &x, q(int(3), int(2), 2));
        assert_eq!((&x * &x).to_string(), "3+2√2");
    }

    #[test]
    fn additive_identity() {
        let x = q(rat(2, 3), rat(-5, 7), 3);
        assert_eq!(&QuadExt::zero() + &x, x);
        assert_eq!(&q(int(0), int(0), 3) + &x, x);
    }

    #[test]
    fn golden_mean_squares_to_one_plus_itself() {
        let phi = QuadExt::phi();
        let sq = &phi * &phi;
        assert_eq!(sq, q(rat(3, 2), rat(1, 2), 5));
        assert_eq!(sq, &QuadExt::one() + &phi);
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let r2 = QuadExt::sqrt(2).unwrap();
        let r3 = QuadExt::sqrt(3).unwrap();
        assert_eq!(quad_add(&r2, &r3), Err(NumericError::MixedFields(2, 3)));
        assert!(quad_mul(&r2, &r3).is_err());
        // rationals embed in every field
        assert!(quad_add(&r2, &QuadExt::from_int(7)).is_ok());
    }

    #[test]
    fn division_by_zero() {
        let r2 = QuadExt::sqrt(2).unwrap();
        assert_eq!(quad_div(&r2, &QuadExt::zero()), Err(NumericError::DivisionByZero));
    }

    #[test]
    fn rejects_non_square_free_radicand() {
        assert_eq!(QuadExt::sqrt(8), Err(NumericError::NotSquareFree(8)));
    }

    #[test]
    fn zero_iff_both_parts_zero() {
        let x = q(int(1), int(-1), 2);
        assert!(!x.is_zero());
        assert_eq!(x.signum(), Ordering::Less);
        assert!(q(int(0), int(0), 2).is_zero());
    }

    #[test]
    fn sign_of_mixed_parts() {
        // 3 - 2√2 ≈ 0.17
        assert_eq!(q(int(3), int(-2), 2).signum(), Ordering::Greater);
        // 1 - √5/2 < 0
        assert_eq!(q(int(1), rat(-1, 2), 5).signum(), Ordering::Less);
        assert_eq!(q(int(-1), int(1), 3).signum(), Ordering::Greater);
    }

    #[test]
    fn display_forms() {
        assert_eq!(q(rat(1, 4), rat(-1, 4), 5).to_string(), "1/4-(1/4)√5");
        assert_eq!(q(int(0), int(-1), 2).to_string(), "-√2");
        assert_eq!(QuadExt::from_int(3).to_string(), "3");
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..20, 1i64..9).prop_map(|(n, d)| rat(n, d))
    }

    fn element(d: u64) -> impl Strategy<Value = QuadExt> {
        (small_rational(), small_rational()).prop_map(move |(a, b)| q(a, b, d))
    }

    fn triple() -> impl Strategy<Value = (QuadExt, QuadExt, QuadExt)> {
        prop_oneof![Just(2u64), Just(3), Just(5)]
            .prop_flat_map(|d| (element(d), element(d), element(d)))
    }

    proptest! {
        #[test]
        fn field_axioms((x, y, z) in triple()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        }

        #[test]
        fn division_inverts_multiplication((x, y, _z) in triple()) {
            prop_assume!(!y.is_zero());
            prop_assert_eq!(quad_div(&quad_mul(&x, &y).unwrap(), &y).unwrap(), x);
        }

        #[test]
        fn sign_matches_float((x, _y, _z) in triple()) {
            let f = x.to_f64();
            prop_assume!(f.abs() > 1e-9);
            prop_assert_eq!(x.signum(), f.partial_cmp(&0.0).unwrap());
        }
    }
}
