//! Recursive-descent parser for trig expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' unary) | unary)*      juxtaposition multiplies: 2t, 4(1 - c)
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := NUM ('/' NUM)? | ('sin' | 'cos') '(' angle ')' | '(' expr ')'
//! angle  := integer-linear form k*90 ± n*t, in degrees
//! ```
//!
//! `θ` and `theta` are accepted for `t`; `−`, `·`, `×` and `°` are accepted
//! as their ASCII counterparts (the degree sign is ignored).

use num_traits::{One, Zero};
use thiserror::Error;

use super::ast::{rational_as_i64, LinearAngle, TrigExpr};
use crate::numeric::{parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("column {column}: {kind}")]
pub struct ParseError {
    /// 1-based character column in the input.
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unexpected {0}")]
    UnexpectedToken(String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown function or variable `{0}`")]
    UnknownIdent(String),
    #[error("unsupported angle variable `{0}`; only `t` is allowed")]
    SecondVariable(String),
    #[error("the angle variable may only appear inside sin or cos")]
    BareVariable,
    #[error("trig argument is not of the form k*90 ± n*t with integers k, n")]
    NotIntegerLinear,
    #[error("exponent must be a non-negative integer")]
    BadExponent,
    #[error("identity must contain exactly one `=`")]
    NotAnIdentity,
    #[error("bad number literal")]
    BadNumber,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eq,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number `{n}`"),
            Tok::Ident(i) => format!("identifier `{i}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Eq => "`=`".into(),
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self, Tok::Num(_) | Tok::Ident(_) | Tok::LParen)
    }
}

fn tokenize(text: &str, col_offset: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col_offset + i + 1;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' | '°' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' | '×' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '=' => Tok::Eq,
            'θ' => Tok::Ident("t".into()),
            c if c.is_ascii_digit() || c == '.' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    i += 1;
                }
                out.push((Tok::Num(chars[start..i].iter().collect()), col));
                continue;
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let word = if word == "theta" { "t".to_string() } else { word };
                out.push((Tok::Ident(word), col));
                continue;
            }
            other => {
                return Err(ParseError {
                    column: col,
                    kind: ParseErrorKind::UnexpectedChar(other),
                })
            }
        };
        out.push((tok, col));
        i += 1;
    }
    Ok(out)
}

/// `c0 + c1·t` while parsing a trig argument.
#[derive(Clone, Debug)]
struct Linear {
    c0: Rational,
    c1: Rational,
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end_col)
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            column: self.col(),
            kind,
        }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(t) => self.err(ParseErrorKind::UnexpectedToken(t.describe())),
            None => self.err(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected())
        }
    }

    fn expr(&mut self) -> Result<TrigExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = TrigExpr::sum(lhs, self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = TrigExpr::difference(lhs, self.term()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<TrigExpr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    lhs = TrigExpr::product(lhs, self.unary()?);
                }
                Some(t) if t.starts_atom() => {
                    lhs = TrigExpr::product(lhs, self.unary()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<TrigExpr, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(TrigExpr::negated(self.unary()?));
        }
        self.power()
    }

    fn power(&mut self) -> Result<TrigExpr, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let col = self.col();
        match self.bump() {
            Some(Tok::Num(n)) => {
                let exp = n.parse::<u32>().map_err(|_| ParseError {
                    column: col,
                    kind: ParseErrorKind::BadExponent,
                })?;
                Ok(TrigExpr::pow(base, exp))
            }
            _ => Err(ParseError {
                column: col,
                kind: ParseErrorKind::BadExponent,
            }),
        }
    }

    fn number(&mut self) -> Result<Rational, ParseError> {
        let col = self.col();
        let bad = || ParseError {
            column: col,
            kind: ParseErrorKind::BadNumber,
        };
        let Some(Tok::Num(text)) = self.bump() else {
            self.pos -= 1;
            return Err(self.unexpected());
        };
        let mut value = parse_rational(&text).map_err(|_| bad())?;
        // `p/q` is a single rational literal
        if self.peek() == Some(&Tok::Slash) {
            self.pos += 1;
            let dcol = self.col();
            let Some(Tok::Num(den)) = self.bump() else {
                self.pos -= 1;
                return Err(self.unexpected());
            };
            let den = parse_rational(&den).map_err(|_| bad())?;
            if den.is_zero() {
                return Err(ParseError {
                    column: dcol,
                    kind: ParseErrorKind::BadNumber,
                });
            }
            value /= den;
        }
        Ok(value)
    }

    fn atom(&mut self) -> Result<TrigExpr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(_)) => Ok(TrigExpr::num(self.number()?)),
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                let col = self.col();
                match name.as_str() {
                    "sin" | "cos" => {
                        self.pos += 1;
                        self.expect(Tok::LParen)?;
                        let angle = self.angle()?;
                        self.expect(Tok::RParen)?;
                        Ok(if name == "sin" {
                            TrigExpr::Sin(angle)
                        } else {
                            TrigExpr::Cos(angle)
                        })
                    }
                    "t" => Err(ParseError {
                        column: col,
                        kind: ParseErrorKind::BareVariable,
                    }),
                    _ => Err(ParseError {
                        column: col,
                        kind: ParseErrorKind::UnknownIdent(name),
                    }),
                }
            }
            _ => Err(self.unexpected()),
        }
    }

    fn angle(&mut self) -> Result<LinearAngle, ParseError> {
        let col = self.col();
        let lin = self.lin_expr()?;
        let not_linear = || ParseError {
            column: col,
            kind: ParseErrorKind::NotIntegerLinear,
        };
        let multiple = rational_as_i64(&lin.c1).ok_or_else(not_linear)?;
        let quarter = lin.c0 / Rational::from_integer(90.into());
        let quarter_turns = rational_as_i64(&quarter).ok_or_else(not_linear)?;
        Ok(LinearAngle::new(quarter_turns, multiple))
    }

    fn lin_expr(&mut self) -> Result<Linear, ParseError> {
        let mut acc = self.lin_term()?;
        loop {
            let sign = match self.peek() {
                Some(Tok::Plus) => 1,
                Some(Tok::Minus) => -1,
                _ => return Ok(acc),
            };
            self.pos += 1;
            let rhs = self.lin_term()?;
            if sign > 0 {
                acc.c0 += rhs.c0;
                acc.c1 += rhs.c1;
            } else {
                acc.c0 -= rhs.c0;
                acc.c1 -= rhs.c1;
            }
        }
    }

    fn lin_term(&mut self) -> Result<Linear, ParseError> {
        let mut acc = self.lin_unary()?;
        loop {
            let col = self.col();
            match self.peek() {
                Some(Tok::Star) => self.pos += 1,
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.lin_unary()?;
                    if !rhs.c1.is_zero() || rhs.c0.is_zero() {
                        return Err(ParseError {
                            column: col,
                            kind: ParseErrorKind::NotIntegerLinear,
                        });
                    }
                    acc = Linear {
                        c0: &acc.c0 / &rhs.c0,
                        c1: &acc.c1 / &rhs.c0,
                    };
                    continue;
                }
                Some(Tok::Caret) => {
                    return Err(ParseError {
                        column: col,
                        kind: ParseErrorKind::NotIntegerLinear,
                    })
                }
                Some(t) if t.starts_atom() => {}
                _ => return Ok(acc),
            }
            let col = self.col();
            let rhs = self.lin_unary()?;
            if !acc.c1.is_zero() && !rhs.c1.is_zero() {
                return Err(ParseError {
                    column: col,
                    kind: ParseErrorKind::NotIntegerLinear,
                });
            }
            acc = Linear {
                c0: &acc.c0 * &rhs.c0,
                c1: &acc.c0 * &rhs.c1 + &acc.c1 * &rhs.c0,
            };
        }
    }

    fn lin_unary(&mut self) -> Result<Linear, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            let inner = self.lin_unary()?;
            return Ok(Linear {
                c0: -inner.c0,
                c1: -inner.c1,
            });
        }
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Num(_)) => Ok(Linear {
                c0: self.number()?,
                c1: Rational::zero(),
            }),
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.lin_expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Some(Tok::Ident(name)) if name == "t" => {
                self.pos += 1;
                Ok(Linear {
                    c0: Rational::zero(),
                    c1: Rational::one(),
                })
            }
            Some(Tok::Ident(name)) if name == "sin" || name == "cos" => Err(ParseError {
                column: col,
                kind: ParseErrorKind::NotIntegerLinear,
            }),
            Some(Tok::Ident(name)) => Err(ParseError {
                column: col,
                kind: ParseErrorKind::SecondVariable(name),
            }),
            Some(Tok::Caret) => Err(ParseError {
                column: col,
                kind: ParseErrorKind::NotIntegerLinear,
            }),
            _ => Err(self.unexpected()),
        }
    }
}

fn parse_at(text: &str, col_offset: usize) -> Result<TrigExpr, ParseError> {
    let toks = tokenize(text, col_offset)?;
    let end_col = col_offset + text.chars().count() + 1;
    let mut p = Parser {
        toks,
        pos: 0,
        end_col,
    };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.unexpected());
    }
    Ok(e)
}

/// Parses a single expression.
pub fn parse_trig(text: &str) -> Result<TrigExpr, ParseError> {
    parse_at(text, 0)
}

/// Parses `"LHS = RHS"`.
pub fn parse_identity(text: &str) -> Result<(TrigExpr, TrigExpr), ParseError> {
    let mut parts = text.splitn(3, '=');
    let (Some(lhs), Some(rhs), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(ParseError {
            column: 1,
            kind: ParseErrorKind::NotAnIdentity,
        });
    };
    let offset = lhs.chars().count() + 1;
    Ok((parse_at(lhs, 0)?, parse_at(rhs, offset)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat};

    #[test]
    fn cos_two_t() {
        assert_eq!(
            parse_trig("cos(2t)").unwrap(),
            TrigExpr::Cos(LinearAngle::new(0, 2))
        );
        assert_eq!(parse_trig("cos(2*t)").unwrap(), parse_trig("cos(2t)").unwrap());
    }

    #[test]
    fn summation_term_has_two_shifted_sines() {
        let e = parse_trig("1 + 4*(1 - 2*cos(t))*sin(270 - t) + 2*sin(270 - 2*t)").unwrap();
        let sines: Vec<_> = e
            .leaves()
            .into_iter()
            .filter(|(is_sin, _)| *is_sin)
            .map(|(_, a)| a)
            .collect();
        assert_eq!(sines, vec![LinearAngle::new(3, -1), LinearAngle::new(3, -2)]);
        assert!(sines.iter().all(LinearAngle::is_shifted));
    }

    #[test]
    fn unicode_and_juxtaposition() {
        let a = parse_trig("1 + 4 (1−2cos(θ)) sin(270° − θ)").unwrap();
        let b = parse_trig("1 + 4*(1-2*cos(t))*sin(270-t)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn second_variable_is_rejected() {
        let err = parse_trig("sin(t + u)").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::SecondVariable("u".into()));
        assert_eq!(err.column, 9);
    }

    #[test]
    fn non_linear_arguments_are_rejected() {
        for bad in ["sin(t*t)", "cos(45 + t)", "sin(t/2)", "sin(sin(t))", "cos(t^2)"] {
            let err = parse_trig(bad).unwrap_err();
            assert_eq!(err.kind, ParseErrorKind::NotIntegerLinear, "{bad}");
        }
    }

    #[test]
    fn bare_variable_and_syntax_errors_report_columns() {
        assert_eq!(parse_trig("t + 1").unwrap_err().kind, ParseErrorKind::BareVariable);
        let e = parse_trig("1 + * 2").unwrap_err();
        assert_eq!(e.column, 5);
        let e = parse_trig("(1 + 2").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(e.column, 7);
        assert!(matches!(
            parse_trig("cos(t)^x").unwrap_err().kind,
            ParseErrorKind::BadExponent
        ));
        assert!(matches!(
            parse_trig("1 $ 2").unwrap_err().kind,
            ParseErrorKind::UnexpectedChar('$')
        ));
    }

    #[test]
    fn rational_literals_and_negation_fold() {
        assert_eq!(parse_trig("1/2").unwrap(), TrigExpr::Num(rat(1, 2)));
        assert_eq!(parse_trig("-3").unwrap(), TrigExpr::Num(int(-3)));
        assert_eq!(parse_trig("0.25").unwrap(), TrigExpr::Num(rat(1, 4)));
    }

    #[test]
    fn identity_split_keeps_columns() {
        let (l, r) = parse_identity("cos(2t) = 2*cos(t)^2 - 1").unwrap();
        assert_eq!(l, TrigExpr::Cos(LinearAngle::new(0, 2)));
        assert_eq!(r.to_string(), "2*cos(t)^2 - 1");
        let err = parse_identity("cos(t) = sin(q)").unwrap_err();
        assert_eq!(err.column, 14);
        assert_eq!(
            parse_identity("cos(t)").unwrap_err().kind,
            ParseErrorKind::NotAnIdentity
        );
    }

    #[test]
    fn printing_round_trips() {
        for text in [
            "1 + 4*(1 - 2*cos(t))*sin(270 - t) + 2*sin(270 - 2*t)",
            "2 + (1 - 2*cos(t))^2",
            "-(sin(t) + 1)^3*cos(-t)",
            "(1/2)*cos(90 + 3*t) - (-2)",
            "a", // error case skipped below
        ] {
            let Ok(e) = parse_trig(text) else { continue };
            let printed = e.to_string();
            assert_eq!(parse_trig(&printed).unwrap(), e, "{printed}");
        }
    }
}
