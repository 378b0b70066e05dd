use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::ast::{LinearAngle, TrigExpr};
use super::poly::BivarPoly;
use crate::numeric::int;

/// Rewrite rules the normalizer may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// `sin/cos(k·90° ± x)` → `±sin x` / `±cos x`, and `f(−x)` by parity.
    AngleShift,
    /// Sum and difference formulas.
    AngleSum,
    /// `sin 2x = 2 sin x cos x`.
    DoubleSin,
    /// `cos 2x = 2 cos² x − 1`, obtained without the Pythagorean identity.
    DoubleCosPaper,
    /// `s² → 1 − c²`.
    Pythagorean,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::AngleShift => "angle_shift",
            Rule::AngleSum => "angle_sum",
            Rule::DoubleSin => "double_sin",
            Rule::DoubleCosPaper => "double_cos_paper",
            Rule::Pythagorean => "pythagorean",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Whitelist of admissible rules. Missing JSON fields fall back to the
/// default set, which leaves the Pythagorean rule off.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct RuleSet {
    pub angle_shift: bool,
    pub angle_sum: bool,
    pub double_sin: bool,
    pub double_cos_paper: bool,
    pub pythagorean: bool,
}

impl Default for RuleSet {
    fn default() -> Self {
        Self {
            angle_shift: true,
            angle_sum: true,
            double_sin: true,
            double_cos_paper: true,
            pythagorean: false,
        }
    }
}

impl RuleSet {
    pub fn none() -> Self {
        Self {
            angle_shift: false,
            angle_sum: false,
            double_sin: false,
            double_cos_paper: false,
            pythagorean: false,
        }
    }

    pub fn with(mut self, rule: Rule, on: bool) -> Self {
        match rule {
            Rule::AngleShift => self.angle_shift = on,
            Rule::AngleSum => self.angle_sum = on,
            Rule::DoubleSin => self.double_sin = on,
            Rule::DoubleCosPaper => self.double_cos_paper = on,
            Rule::Pythagorean => self.pythagorean = on,
        }
        self
    }

    pub fn enabled(&self, rule: Rule) -> bool {
        match rule {
            Rule::AngleShift => self.angle_shift,
            Rule::AngleSum => self.angle_sum,
            Rule::DoubleSin => self.double_sin,
            Rule::DoubleCosPaper => self.double_cos_paper,
            Rule::Pythagorean => self.pythagorean,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NormalizeError {
    #[error("`{0}` needs the angle_shift rule")]
    ShiftDisabled(String),
    #[error("cannot reduce {func}({n}t): enable angle_sum or the matching double-angle rule")]
    MultipleAngle { func: &'static str, n: i64 },
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Func {
    Sin,
    Cos,
}

struct Normalizer {
    rules: RuleSet,
    fired: BTreeSet<Rule>,
    memo: HashMap<(Func, i64), BivarPoly>,
}

impl Normalizer {
    fn fire(&mut self, rule: Rule) {
        self.fired.insert(rule);
    }

    fn expr(&mut self, e: &TrigExpr) -> Result<BivarPoly, NormalizeError> {
        Ok(match e {
            TrigExpr::Num(r) => BivarPoly::constant(r.clone()),
            TrigExpr::Sin(a) => self.leaf(Func::Sin, *a)?,
            TrigExpr::Cos(a) => self.leaf(Func::Cos, *a)?,
            TrigExpr::Neg(x) => self.expr(x)?.neg(),
            TrigExpr::Add(l, r) => self.expr(l)?.add(&self.expr(r)?),
            TrigExpr::Sub(l, r) => self.expr(l)?.sub(&self.expr(r)?),
            TrigExpr::Mul(l, r) => self.expr(l)?.mul(&self.expr(r)?),
            TrigExpr::Pow(b, k) => self.expr(b)?.pow(*k),
        })
    }

    /// `f(90k + m·t)` → `±sin(n t)` or `±cos(n t)` with `n = |m|`.
    fn leaf(&mut self, func: Func, angle: LinearAngle) -> Result<BivarPoly, NormalizeError> {
        let n = angle.multiple.abs();
        if !angle.is_shifted() {
            return self.multiple(func, n);
        }
        if !self.rules.angle_shift {
            let name = if func == Func::Sin { "sin" } else { "cos" };
            return Err(NormalizeError::ShiftDisabled(format!("{name}({angle})")));
        }
        self.fire(Rule::AngleShift);
        let reflected = angle.multiple < 0;
        // sin(90k + x), cos(90k + x) in terms of sin x, cos x
        let (base, negate) = match (func, angle.quarter_turns.rem_euclid(4)) {
            (Func::Sin, 0) => (Func::Sin, false),
            (Func::Sin, 1) => (Func::Cos, false),
            (Func::Sin, 2) => (Func::Sin, true),
            (Func::Sin, _) => (Func::Cos, true),
            (Func::Cos, 0) => (Func::Cos, false),
            (Func::Cos, 1) => (Func::Sin, true),
            (Func::Cos, 2) => (Func::Cos, true),
            (Func::Cos, _) => (Func::Sin, false),
        };
        // x = −n t: sin is odd, cos is even
        let negate = negate ^ (reflected && base == Func::Sin);
        let p = self.multiple(base, n)?;
        Ok(if negate { p.neg() } else { p })
    }

    /// `sin(n t)` / `cos(n t)` for `n ≥ 0`, highest multiple first.
    fn multiple(&mut self, func: Func, n: i64) -> Result<BivarPoly, NormalizeError> {
        match (func, n) {
            (Func::Sin, 0) => return Ok(BivarPoly::zero()),
            (Func::Cos, 0) => return Ok(BivarPoly::one()),
            (Func::Sin, 1) => return Ok(BivarPoly::s()),
            (Func::Cos, 1) => return Ok(BivarPoly::c()),
            _ => {}
        }
        if let Some(p) = self.memo.get(&(func, n)) {
            // rules were already recorded on first expansion
            return Ok(p.clone());
        }
        let two = int(2);
        let even = n % 2 == 0;
        let p = match func {
            Func::Cos if even && self.rules.double_cos_paper => {
                self.fire(Rule::DoubleCosPaper);
                let half = self.multiple(Func::Cos, n / 2)?;
                half.pow(2).scale(&two).sub(&BivarPoly::one())
            }
            Func::Sin if even && self.rules.double_sin => {
                self.fire(Rule::DoubleSin);
                let s = self.multiple(Func::Sin, n / 2)?;
                let c = self.multiple(Func::Cos, n / 2)?;
                s.mul(&c).scale(&two)
            }
            _ if self.rules.angle_sum => {
                self.fire(Rule::AngleSum);
                let s = self.multiple(Func::Sin, n - 1)?;
                let c = self.multiple(Func::Cos, n - 1)?;
                match func {
                    Func::Sin => s.mul(&BivarPoly::c()).add(&c.mul(&BivarPoly::s())),
                    Func::Cos => c.mul(&BivarPoly::c()).sub(&s.mul(&BivarPoly::s())),
                }
            }
            _ => {
                return Err(NormalizeError::MultipleAngle {
                    func: if func == Func::Sin { "sin" } else { "cos" },
                    n,
                })
            }
        };
        self.memo.insert((func, n), p.clone());
        Ok(p)
    }
}

/// Normal form of `e` together with the rules that fired.
pub fn normalize_traced(
    e: &TrigExpr,
    rules: RuleSet,
) -> Result<(BivarPoly, BTreeSet<Rule>), NormalizeError> {
    let mut n = Normalizer {
        rules,
        fired: BTreeSet::new(),
        memo: HashMap::new(),
    };
    let mut p = n.expr(e)?;
    if rules.pythagorean {
        let (reduced, fired) = p.reduce_pythagorean();
        if fired {
            n.fire(Rule::Pythagorean);
        }
        p = reduced;
    }
    Ok((p, n.fired))
}

/// Expanded polynomial in `s`, `c` reached by the enabled rules.
pub fn normalize(e: &TrigExpr, rules: RuleSet) -> Result<BivarPoly, NormalizeError> {
    normalize_traced(e, rules).map(|(p, _)| p)
}
