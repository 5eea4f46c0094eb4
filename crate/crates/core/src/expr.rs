//! Text syntax for series and field elements.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary ("*" unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" ["-"] INT)?
//! atom   := RATIONAL | "s" INT | "x" INT | "e"
//!         | "gamma(" INT ")"
//!         | "inv(" expr ["," INT] ")"
//!         | "comm(" expr "," expr ["," INT] ")"
//!         | "trunc(" expr "," INT ")"
//!         | "(" expr ")"
//! ```
//!
//! `RATIONAL` is `p` or `p/q` with no interior spaces. `s{i}` is `√p_i`,
//! `x{i}` the group generator, `e` the identity word. Binary operators are
//! left associative. An omitted depth in `inv` or `comm` means the default
//! depth passed to [`eval_with_depth`]. The canonical output of [`Series`]'s `Display` is
//! accepted by this grammar and evaluates back to the same value.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::field::FieldElem;
use crate::gamma::gamma_series;
use crate::primes::PrimeTable;
use crate::rational::{self, Rational};
use crate::series::{Series, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Rational(Rational),
    Sqrt(u32),
    Generator(u32),
    Identity,
    Gamma(u32),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    /// Depth `None` falls back to the evaluator's default depth.
    Inv(Box<Expr>, Option<u32>),
    Comm(Box<Expr>, Box<Expr>, Option<u32>),
    Trunc(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at offset {}: expected {}, found {}",
            self.offset,
            self.expected.join(" or "),
            self.found
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("an inversion depth is required: use inv(expr, depth) or set a default depth")]
    NeedsDepth,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(Rational),
    Int(BigInt),
    Ident(String, Option<BigInt>),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(r) => format!("number `{}`", rational::format_rational(r)),
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Ident(name, Some(i)) => format!("`{name}{i}`"),
            Tok::Ident(name, None) => format!("`{name}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits_from = |mut j: usize| {
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'0'..=b'9' => {
                let end = digits_from(i);
                let num: BigInt = input[i..end].parse().expect("ascii digits");
                if end < bytes.len() && bytes[end] == b'/' {
                    let den_end = digits_from(end + 1);
                    if den_end == end + 1 {
                        return Err(ParseError {
                            offset: end + 1,
                            expected: vec!["denominator"],
                            found: found_at(input, end + 1),
                        });
                    }
                    let den: BigInt = input[end + 1..den_end].parse().expect("ascii digits");
                    if den.is_zero() {
                        return Err(ParseError {
                            offset: end + 1,
                            expected: vec!["nonzero denominator"],
                            found: "`0`".into(),
                        });
                    }
                    i = den_end;
                    out.push((start, Tok::Num(Rational::new(num, den))));
                } else {
                    i = end;
                    out.push((start, Tok::Int(num)));
                }
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = i;
                while end < bytes.len() && bytes[end].is_ascii_alphabetic() {
                    end += 1;
                }
                let name = input[i..end].to_string();
                let idx_end = digits_from(end);
                let index = (idx_end > end).then(|| input[end..idx_end].parse().expect("ascii digits"));
                i = idx_end;
                out.push((start, Tok::Ident(name, index)));
                continue;
            }
            _ => {
                return Err(ParseError {
                    offset: i,
                    expected: vec!["expression"],
                    found: found_at(input, i),
                })
            }
        };
        i += 1;
        out.push((start, tok));
    }
    out.push((input.len(), Tok::End));
    Ok(out)
}

fn found_at(input: &str, offset: usize) -> String {
    match input[offset..].chars().next() {
        Some(c) => format!("`{c}`"),
        None => "end of input".into(),
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

const ATOM_START: &[&str] = &[
    "number", "s{i}", "x{i}", "e", "gamma(", "inv(", "comm(", "trunc(", "(", "-",
];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            offset: self.offset(),
            expected: expected.to_vec(),
            found: self.peek().describe(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let offset = self.offset();
        let Tok::Int(n) = self.peek().clone() else {
            return Err(self.error(&["integer exponent"]));
        };
        self.bump();
        let n = if negative { -n } else { n };
        let exp = n.to_i64().filter(|e| e.abs() <= u32::MAX as i64).ok_or(ParseError {
            offset,
            expected: vec!["exponent of at most 32 bits"],
            found: format!("`{n}`"),
        })?;
        Ok(Expr::Pow(Box::new(base), exp))
    }

    fn positive_int(&mut self, what: &'static str) -> Result<u32, ParseError> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Int(n) if n.is_positive() => {
                self.bump();
                n.to_u32().ok_or(ParseError {
                    offset,
                    expected: vec![what],
                    found: format!("`{n}`"),
                })
            }
            _ => Err(self.error(&[what])),
        }
    }

    /// `")"` or `"," INT ")"`.
    fn optional_depth(&mut self) -> Result<Option<u32>, ParseError> {
        match self.peek() {
            Tok::RParen => {
                self.bump();
                Ok(None)
            }
            Tok::Comma => {
                self.bump();
                let d = self.positive_int("positive depth")?;
                self.expect(Tok::RParen, ")")?;
                Ok(Some(d))
            }
            _ => Err(self.error(&[",", ")"])),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Rational(Rational::from_integer(n)))
            }
            Tok::Num(r) => {
                self.bump();
                Ok(Expr::Rational(r))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, ")")?;
                Ok(e)
            }
            Tok::Ident(name, index) => {
                self.bump();
                let index = match index {
                    Some(i) => Some(i.to_u32().filter(|&i| i >= 1).ok_or(ParseError {
                        offset,
                        expected: vec!["index between 1 and 2^32 - 1"],
                        found: format!("`{name}{i}`"),
                    })?),
                    None => None,
                };
                match (name.as_str(), index) {
                    ("s", Some(i)) => Ok(Expr::Sqrt(i)),
                    ("x", Some(i)) => Ok(Expr::Generator(i)),
                    ("e", None) => Ok(Expr::Identity),
                    ("gamma", None) => {
                        self.expect(Tok::LParen, "(")?;
                        let n = self.positive_int("positive truncation length")?;
                        self.expect(Tok::RParen, ")")?;
                        Ok(Expr::Gamma(n))
                    }
                    ("inv", None) => {
                        self.expect(Tok::LParen, "(")?;
                        let e = self.expr()?;
                        let d = self.optional_depth()?;
                        Ok(Expr::Inv(Box::new(e), d))
                    }
                    ("trunc", None) => {
                        self.expect(Tok::LParen, "(")?;
                        let e = self.expr()?;
                        self.expect(Tok::Comma, ",")?;
                        let d = self.positive_int("positive depth")?;
                        self.expect(Tok::RParen, ")")?;
                        Ok(Expr::Trunc(Box::new(e), d))
                    }
                    ("comm", None) => {
                        self.expect(Tok::LParen, "(")?;
                        let a = self.expr()?;
                        self.expect(Tok::Comma, ",")?;
                        let b = self.expr()?;
                        let d = self.optional_depth()?;
                        Ok(Expr::Comm(Box::new(a), Box::new(b), d))
                    }
                    _ => Err(ParseError {
                        offset,
                        expected: ATOM_START.to_vec(),
                        found: format!("identifier `{name}{}`", index.map_or(String::new(), |i| i.to_string())),
                    }),
                }
            }
            _ => Err(self.error(ATOM_START)),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(input)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["operator", "end of input"]));
    }
    Ok(e)
}

fn pow(base: &Series, exp: u32, primes: &PrimeTable) -> Series {
    let mut acc = Series::one().with_truncation(base.truncation());
    let mut sq = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&sq, primes);
        }
        e >>= 1;
        if e > 0 {
            sq = sq.mul(&sq, primes);
        }
    }
    acc
}

pub fn eval(e: &Expr, primes: &PrimeTable) -> Result<Series, EvalError> {
    eval_with_depth(e, primes, None)
}

/// Evaluates with `default_depth` standing in for omitted `inv`/`comm`
/// depths.
pub fn eval_with_depth(e: &Expr, primes: &PrimeTable, default_depth: Option<u32>) -> Result<Series, EvalError> {
    let eval = |e: &Expr, primes: &PrimeTable| eval_with_depth(e, primes, default_depth);
    let depth = |d: &Option<u32>| d.or(default_depth).ok_or(EvalError::NeedsDepth);
    Ok(match e {
        Expr::Rational(r) => Series::rational(r.clone()),
        Expr::Sqrt(i) => Series::sqrt_prime(*i),
        Expr::Generator(i) => Series::generator(*i),
        Expr::Identity => Series::one(),
        Expr::Gamma(n) => gamma_series(*n)?,
        Expr::Neg(a) => -eval(a, primes)?,
        Expr::Add(a, b) => &eval(a, primes)? + &eval(b, primes)?,
        Expr::Sub(a, b) => &eval(a, primes)? - &eval(b, primes)?,
        Expr::Mul(a, b) => eval(a, primes)?.mul(&eval(b, primes)?, primes),
        Expr::Pow(a, k) => {
            let base = eval(a, primes)?;
            if *k >= 0 {
                pow(&base, *k as u32, primes)
            } else if base.is_monomial() {
                let inv = base.inv(1, primes)?;
                pow(&inv, k.unsigned_abs() as u32, primes)
            } else if base.is_zero() {
                return Err(SeriesError::ZeroInversion.into());
            } else {
                return Err(EvalError::NeedsDepth);
            }
        }
        Expr::Inv(a, d) => eval(a, primes)?.inv(depth(d)?, primes)?,
        Expr::Comm(a, b, d) => Series::commutator(&eval(a, primes)?, &eval(b, primes)?, depth(d)?, primes)?,
        Expr::Trunc(a, d) => {
            let v = eval(a, primes)?;
            let depth = v.truncation().map_or(*d, |t| t.min(*d));
            v.with_truncation(Some(depth))
        }
    })
}

/// Parses and evaluates in one step.
pub fn eval_str(input: &str, primes: &PrimeTable) -> Result<Series, ExprError> {
    Ok(eval(&parse(input)?, primes)?)
}

/// Parses a field element: an expression that evaluates to an exact scalar.
pub fn parse_field_elem(input: &str, primes: &PrimeTable) -> Result<FieldElem, ExprError> {
    let s = eval_str(input, primes)?;
    let result = match s.terms().next() {
        _ if !s.is_exact() => Err(ExprError::NotAFieldElement),
        None => Ok(FieldElem::zero()),
        Some((w, a)) if s.len() == 1 && w.is_identity() => Ok(a.clone()),
        _ => Err(ExprError::NotAFieldElement),
    };
    result
}

/// Parses a group word such as `x1^-1*x3^2` or `e`.
pub fn parse_group_word(input: &str, primes: &PrimeTable) -> Result<crate::group::GroupWord, ExprError> {
    let s = eval_str(input, primes)?;
    let result = match s.terms().next() {
        Some((w, a)) if s.len() == 1 && s.is_exact() && a.is_one() => Ok(w.clone()),
        _ => Err(ExprError::NotAGroupWord),
    };
    result
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("expression is not an exact field element")]
    NotAFieldElement,
    #[error("expression is not a group word")]
    NotAGroupWord,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupWord;
    use crate::rational::int;

    fn p() -> PrimeTable {
        PrimeTable::default()
    }

    fn ev(s: &str) -> Series {
        eval_str(s, &p()).unwrap()
    }

    #[test]
    fn parses_gamma_two() {
        let e = parse("1*x1^-1 + 1*x2^-1").unwrap();
        let expected = Expr::Add(
            Box::new(Expr::Mul(
                Box::new(Expr::Rational(int(1))),
                Box::new(Expr::Pow(Box::new(Expr::Generator(1)), -1)),
            )),
            Box::new(Expr::Mul(
                Box::new(Expr::Rational(int(1))),
                Box::new(Expr::Pow(Box::new(Expr::Generator(2)), -1)),
            )),
        );
        assert_eq!(e, expected);
        assert_eq!(eval(&e, &p()).unwrap(), gamma_series(2).unwrap());
    }

    #[test]
    fn twisted_commutation_in_syntax() {
        let expected = ev("s1*x1").scale(&int(2));
        assert_eq!(ev("s1*x1 - x1*s1"), expected);
    }

    #[test]
    fn malformed_input() {
        let err = parse("x1^").unwrap_err();
        assert_eq!(err.offset, 3);
        assert_eq!(err.expected, vec!["integer exponent"]);
        assert_eq!(err.found, "end of input");
        assert_eq!(parse("1 + * x1").unwrap_err().offset, 4);
        assert_eq!(parse("(x1").unwrap_err().expected, vec![")"]);
        assert_eq!(parse("y3").unwrap_err().offset, 0);
        assert_eq!(parse("x1 x2").unwrap_err().offset, 3);
        assert_eq!(parse("inv(x1, 0)").unwrap_err().offset, 8);
        assert_eq!(parse("1/0").unwrap_err().offset, 2);
        assert_eq!(parse("x0").unwrap_err().offset, 0);
    }

    #[test]
    fn precedence() {
        // ^ binds tighter than unary minus, which binds tighter than *
        assert_eq!(ev("-x1^2"), -ev("x1^2"));
        assert_eq!(ev("2*-x1"), ev("-2*x1"));
        assert_eq!(ev("1 - x1 - x2"), ev("1 - (x1 + x2)"));
        assert_eq!(ev("-1/2*s1"), Series::sqrt_prime(1).scale(&crate::rational::frac(-1, 2)));
    }

    #[test]
    fn eval_examples() {
        let g = ev("gamma(3)^2");
        assert_eq!(
            g.coeff(&GroupWord::inverse_prefix_product(2)),
            FieldElem::int(2)
        );
        assert_eq!(ev("comm(x1, s1, 1)"), Series::rational(int(-1)));
        let inv = ev("inv(1 - x1, 2)");
        assert_eq!(inv.truncation(), Some(2));
        assert_eq!(inv.try_eq(&ev("trunc(1 + x1 + x1^2, 2)")), Ok(true));
    }

    #[test]
    fn negative_powers() {
        assert_eq!(ev("(s1*x1)^-1"), ev("-1/2*s1*x1^-1"));
        assert_eq!(ev("x1^-3*x1^3"), Series::one());
        assert_eq!(eval_str("(1 + x1)^-1", &p()), Err(ExprError::Eval(EvalError::NeedsDepth)));
        assert_eq!(
            eval_str("0^-1", &p()),
            Err(ExprError::Eval(EvalError::Series(SeriesError::ZeroInversion)))
        );
        assert_eq!(ev("(1 + x1)^0"), Series::one());
    }

    #[test]
    fn default_depth() {
        let e = parse("inv(1 - x1)").unwrap();
        assert_eq!(eval(&e, &p()), Err(EvalError::NeedsDepth));
        let v = eval_with_depth(&e, &p(), Some(2)).unwrap();
        assert_eq!(v, ev("inv(1 - x1, 2)"));
        // an explicit depth wins
        let e = parse("comm(x1, s1, 1)").unwrap();
        assert_eq!(eval_with_depth(&e, &p(), Some(5)).unwrap(), ev("-1"));
        assert!(parse("inv(x1,)").is_err());
    }

    #[test]
    fn canonical_text_round_trips() {
        for text in [
            "3*e - 1*s1*x2 + (1 + 1*s2)*x1",
            "-1/2*s1*s3*x1^-1*x4^2",
            "trunc(1*e + 1*x1 + 1*x1^2, 2)",
            "0",
        ] {
            assert_eq!(ev(text).to_string(), text);
        }
    }

    #[test]
    fn helpers() {
        let a = parse_field_elem("3 - 5*s1", &p()).unwrap();
        assert_eq!(a.to_string(), "3 - 5*s1");
        assert!(parse_field_elem("x1", &p()).is_err());
        let w = parse_group_word("x1^-1*x3^2", &p()).unwrap();
        assert_eq!(w.to_string(), "x1^-1*x3^2");
        assert_eq!(parse_group_word("e", &p()).unwrap(), GroupWord::identity());
        assert!(parse_group_word("2*x1", &p()).is_err());
    }
}
