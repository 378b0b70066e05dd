use std::fmt;

use num_traits::{Signed, ToPrimitive};

use crate::numeric::{rational_to_f64, sin_deg_f64, cos_deg_f64, Rational};

/// Argument of a trig leaf: `quarter_turns · 90° + multiple · t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LinearAngle {
    pub quarter_turns: i64,
    pub multiple: i64,
}

impl LinearAngle {
    pub fn new(quarter_turns: i64, multiple: i64) -> Self {
        Self {
            quarter_turns,
            multiple,
        }
    }

    pub fn offset_degrees(&self) -> i64 {
        self.quarter_turns * 90
    }

    pub fn degrees_at(&self, theta_deg: f64) -> f64 {
        self.offset_degrees() as f64 + self.multiple as f64 * theta_deg
    }

    /// Whether evaluating this argument needs the quadrant shift table.
    pub fn is_shifted(&self) -> bool {
        self.quarter_turns.rem_euclid(4) != 0 || self.multiple < 0
    }
}

impl fmt::Display for LinearAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let off = self.offset_degrees();
        let m = self.multiple;
        let var = |m: i64| match m.abs() {
            1 => "t".to_string(),
            k => format!("{k}*t"),
        };
        match (off, m) {
            (off, 0) => write!(f, "{off}"),
            (0, m) if m < 0 => write!(f, "-{}", var(m)),
            (0, m) => write!(f, "{}", var(m)),
            (off, m) if m < 0 => write!(f, "{off} - {}", var(m)),
            (off, m) => write!(f, "{off} + {}", var(m)),
        }
    }
}

/// Trigonometric expression in a single angle variable `t` (degrees).
///
/// `t` only occurs inside `sin`/`cos` leaves; everything else is a rational
/// polynomial over those leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrigExpr {
    Num(Rational),
    Sin(LinearAngle),
    Cos(LinearAngle),
    Neg(Box<TrigExpr>),
    Add(Box<TrigExpr>, Box<TrigExpr>),
    Sub(Box<TrigExpr>, Box<TrigExpr>),
    Mul(Box<TrigExpr>, Box<TrigExpr>),
    Pow(Box<TrigExpr>, u32),
}

impl TrigExpr {
    pub fn num(r: Rational) -> Self {
        TrigExpr::Num(r)
    }

    pub fn negated(e: TrigExpr) -> Self {
        match e {
            TrigExpr::Num(r) => TrigExpr::Num(-r),
            other => TrigExpr::Neg(Box::new(other)),
        }
    }

    pub fn sum(l: TrigExpr, r: TrigExpr) -> Self {
        TrigExpr::Add(Box::new(l), Box::new(r))
    }

    pub fn difference(l: TrigExpr, r: TrigExpr) -> Self {
        TrigExpr::Sub(Box::new(l), Box::new(r))
    }

    pub fn product(l: TrigExpr, r: TrigExpr) -> Self {
        TrigExpr::Mul(Box::new(l), Box::new(r))
    }

    pub fn pow(base: TrigExpr, exp: u32) -> Self {
        TrigExpr::Pow(Box::new(base), exp)
    }

    /// Direct floating evaluation at `theta_deg`.
    pub fn eval_deg(&self, theta_deg: f64) -> f64 {
        match self {
            TrigExpr::Num(r) => rational_to_f64(r),
            TrigExpr::Sin(a) => sin_deg_f64(a.degrees_at(theta_deg)),
            TrigExpr::Cos(a) => cos_deg_f64(a.degrees_at(theta_deg)),
            TrigExpr::Neg(e) => -e.eval_deg(theta_deg),
            TrigExpr::Add(l, r) => l.eval_deg(theta_deg) + r.eval_deg(theta_deg),
            TrigExpr::Sub(l, r) => l.eval_deg(theta_deg) - r.eval_deg(theta_deg),
            TrigExpr::Mul(l, r) => l.eval_deg(theta_deg) * r.eval_deg(theta_deg),
            TrigExpr::Pow(b, k) => b.eval_deg(theta_deg).powi(*k as i32),
        }
    }

    /// Visits every trig leaf.
    pub fn leaves(&self) -> Vec<(bool, LinearAngle)> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<(bool, LinearAngle)>) {
        match self {
            TrigExpr::Num(_) => {}
            TrigExpr::Sin(a) => out.push((true, *a)),
            TrigExpr::Cos(a) => out.push((false, *a)),
            TrigExpr::Neg(e) | TrigExpr::Pow(e, _) => e.collect_leaves(out),
            TrigExpr::Add(l, r) | TrigExpr::Sub(l, r) | TrigExpr::Mul(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            TrigExpr::Add(..) | TrigExpr::Sub(..) => 1,
            TrigExpr::Mul(..) => 2,
            TrigExpr::Neg(_) => 3,
            TrigExpr::Pow(..) => 4,
            // literals and trig leaves print self-delimited
            _ => 5,
        }
    }

    fn write_operand(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        if self.precedence() < min_prec {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for TrigExpr {
    /// Prints a form that parses back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrigExpr::Num(r) => {
                let body = if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                };
                if r.is_negative() || !r.is_integer() {
                    write!(f, "({body})")
                } else {
                    f.write_str(&body)
                }
            }
            TrigExpr::Sin(a) => write!(f, "sin({a})"),
            TrigExpr::Cos(a) => write!(f, "cos({a})"),
            TrigExpr::Neg(e) => {
                f.write_str("-")?;
                e.write_operand(f, 3)
            }
            TrigExpr::Add(l, r) => {
                l.write_operand(f, 1)?;
                f.write_str(" + ")?;
                r.write_operand(f, 2)
            }
            TrigExpr::Sub(l, r) => {
                l.write_operand(f, 1)?;
                f.write_str(" - ")?;
                r.write_operand(f, 2)
            }
            TrigExpr::Mul(l, r) => {
                l.write_operand(f, 2)?;
                f.write_str("*")?;
                r.write_operand(f, 3)
            }
            TrigExpr::Pow(b, k) => {
                b.write_operand(f, 5)?;
                write!(f, "^{k}")
            }
        }
    }
}

pub(crate) fn rational_as_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}
