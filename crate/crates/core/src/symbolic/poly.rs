use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::ast::{LinearAngle, TrigExpr};
use crate::numeric::{rational_to_f64, Rational};

/// Polynomial in `s = sin t` and `c = cos t` with rational coefficients.
///
/// Keys are `(s_exponent, c_exponent)`; zero coefficients are never stored,
/// so two polynomials are equal exactly when their maps are.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(r: Rational) -> Self {
        Self::monomial(0, 0, r)
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn s() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    pub fn c() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    pub fn monomial(s_exp: u32, c_exp: u32, coeff: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term((s_exp, c_exp), coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, s_exp: u32, c_exp: u32) -> Rational {
        self.terms
            .get(&(s_exp, c_exp))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn max_s_degree(&self) -> u32 {
        self.terms.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    fn add_term(&mut self, key: (u32, u32), coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(*k, v.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, v * r);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((i1, j1), a) in &self.terms {
            for ((i2, j2), b) in &other.terms {
                out.add_term((i1 + i2, j1 + j2), a * b);
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, s: f64, c: f64) -> f64 {
        self.terms
            .iter()
            .map(|((i, j), v)| rational_to_f64(v) * s.powi(*i as i32) * c.powi(*j as i32))
            .sum()
    }

    /// Expression form using only `sin(t)` and `cos(t)` leaves.
    pub fn to_expr(&self) -> TrigExpr {
        let mut acc: Option<TrigExpr> = None;
        for ((i, j), v) in &self.terms {
            let mut term = TrigExpr::num(v.clone());
            for (leaf, e) in [(TrigExpr::Sin(LinearAngle::new(0, 1)), *i), (TrigExpr::Cos(LinearAngle::new(0, 1)), *j)] {
                match e {
                    0 => {}
                    1 => term = TrigExpr::product(term, leaf),
                    e => term = TrigExpr::product(term, TrigExpr::pow(leaf, e)),
                }
            }
            acc = Some(match acc {
                None => term,
                Some(a) => TrigExpr::sum(a, term),
            });
        }
        acc.unwrap_or_else(|| TrigExpr::num(Rational::zero()))
    }

    /// Rewrites every `s^i` with `i ≥ 2` through `s² = 1 − c²` until the
    /// `s`-degree is at most one. Returns whether any monomial was rewritten.
    pub fn reduce_pythagorean(&self) -> (Self, bool) {
        let mut fired = false;
        let mut out = Self::zero();
        let one_minus_c2 = Self::one().sub(&Self::monomial(0, 2, Rational::one()));
        for ((i, j), v) in &self.terms {
            if *i < 2 {
                out.add_term((*i, *j), v.clone());
                continue;
            }
            fired = true;
            let rest = Self::monomial(i % 2, *j, v.clone());
            out = out.add(&rest.mul(&one_minus_c2.pow(i / 2)));
        }
        (out, fired)
    }
}

fn fmt_monomial(s_exp: u32, c_exp: u32) -> String {
    let mut parts = Vec::new();
    for (sym, e) in [("s", s_exp), ("c", c_exp)] {
        match e {
            0 => {}
            1 => parts.push(sym.to_string()),
            e => parts.push(format!("{sym}^{e}")),
        }
    }
    parts.join("*")
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for BivarPoly {
    /// `3 - 4*c + 4*c^2`, ordered by `s` then `c` exponent.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, ((i, j), v)) in self.terms.iter().enumerate() {
            let mag = v.abs();
            if n == 0 {
                if v.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if v.is_negative() { " - " } else { " + " })?;
            }
            let mono = fmt_monomial(*i, *j);
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => f.write_str(&fmt_rational(&mag))?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{}*{}", fmt_rational(&mag), mono)?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermJson {
    s: u32,
    c: u32,
    coeff: String,
}

impl Serialize for BivarPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|((i, j), v)| TermJson {
                s: *i,
                c: *j,
                coeff: fmt_rational(v),
            })
            .collect();
        let mut st = serializer.serialize_struct("BivarPoly", 2)?;
        st.serialize_field("terms", &terms)?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::int;

    #[test]
    fn arithmetic_and_display() {
        let c = BivarPoly::c();
        let one = BivarPoly::one();
        let p = one.sub(&c.scale(&int(2))).pow(2).add(&BivarPoly::constant(int(2)));
        assert_eq!(p.to_string(), "3 - 4*c + 4*c^2");
        assert_eq!(BivarPoly::zero().to_string(), "0");
        assert_eq!(p.sub(&p), BivarPoly::zero());
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let p = BivarPoly::s().sub(&BivarPoly::s());
        assert!(p.is_zero());
        assert_eq!(p.terms().count(), 0);
    }

    #[test]
    fn pythagorean_reduction() {
        let s2 = BivarPoly::s().pow(2);
        let (r, fired) = s2.reduce_pythagorean();
        assert!(fired);
        assert_eq!(r.to_string(), "1 - c^2");
        let s3c = BivarPoly::s().pow(3).mul(&BivarPoly::c());
        let (r, _) = s3c.reduce_pythagorean();
        assert_eq!(r.max_s_degree(), 1);
        for deg in [10.0f64, 33.0, 71.0] {
            let (s, c) = (deg.to_radians().sin(), deg.to_radians().cos());
            assert!((r.eval(s, c) - s3c.eval(s, c)).abs() < 1e-12);
        }
        let (same, fired) = BivarPoly::c().reduce_pythagorean();
        assert!(!fired);
        assert_eq!(same, BivarPoly::c());
    }
}
