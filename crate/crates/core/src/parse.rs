//! Recursive-descent parser for polynomial expressions in `x`.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary)*
//! unary    := '-' unary | power
//! power    := primary ('^' exponent)?
//! exponent := '-'? primary
//! primary  := number | 'x' | '(' expr ')'
//! number   := digits ('.' digits)?
//! ```
//!
//! `^` binds tighter than unary minus, so `-x^2` is `-(x^2)`. Exponents and
//! divisors must be constants; multiplication is always explicit (`2*x`,
//! never `2x`). Whitespace is ignored.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::polynomial::{Polynomial, Rational};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("exponent must be an integer")]
    NonIntegerExponent,
    #[error("exponent must not be negative")]
    NegativeExponent,
    #[error("exponent is larger than {MAX_EXPONENT}")]
    ExponentTooLarge,
    #[error("exponent must not depend on x")]
    NonConstantExponent,
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor must not depend on x")]
    NonConstantDivisor,
}

/// A parse failure at a 0-based character offset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at column {}: {kind}", .position + 1)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    X,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(q) => format!("number `{q}`"),
            Tok::X => "`x`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn syntax(position: usize, msg: impl Into<String>) -> ParseError {
    ParseError { position, kind: ParseErrorKind::Syntax(msg.into()) }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let mut digits = String::new();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    digits.push(chars[i]);
                    i += 1;
                }
                let mut scale = 0u32;
                if i < chars.len() && chars[i] == '.' {
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        digits.push(chars[i]);
                        scale += 1;
                        i += 1;
                    }
                    if scale == 0 {
                        return Err(syntax(i, "expected digits after `.`"));
                    }
                }
                let numer: BigInt = digits.parse().expect("ascii digits");
                toks.push((Tok::Num(Rational::new(numer, BigInt::from(10u32).pow(scale))), start));
                continue;
            }
            'x' | 'X' => Tok::X,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(syntax(start, format!("unexpected character `{other}`"))),
        };
        toks.push((tok, start));
        i += 1;
    }
    toks.push((Tok::End, chars.len()));
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    self.bump();
                    let pos = self.pos();
                    let divisor = self.unary()?;
                    let c = constant_value(&divisor)
                        .ok_or(ParseError { position: pos, kind: ParseErrorKind::NonConstantDivisor })?;
                    if c.is_zero() {
                        return Err(ParseError { position: pos, kind: ParseErrorKind::DivisionByZero });
                    }
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let negated = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let exponent = self.primary()?;
        if *self.peek() == Tok::Caret {
            return Err(syntax(self.pos(), "chained `^` needs parentheses"));
        }
        let err = |kind| ParseError { position: pos, kind };
        let mut e = constant_value(&exponent).ok_or(err(ParseErrorKind::NonConstantExponent))?;
        if negated {
            e = -e;
        }
        if !e.is_integer() {
            return Err(err(ParseErrorKind::NonIntegerExponent));
        }
        if e.is_negative() {
            return Err(err(ParseErrorKind::NegativeExponent));
        }
        let e = e
            .to_integer()
            .to_u32()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or(err(ParseErrorKind::ExponentTooLarge))?;
        Ok(base.pow(e))
    }

    fn primary(&mut self) -> Result<Polynomial, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(q) => Ok(Polynomial::constant(q)),
            Tok::X => Ok(Polynomial::x()),
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(syntax(self.pos(), format!("expected `)`, found {}", self.peek().describe())));
                }
                self.bump();
                Ok(inner)
            }
            other => Err(syntax(pos, format!("expected a number, `x` or `(`, found {}", other.describe()))),
        }
    }
}

fn constant_value(p: &Polynomial) -> Option<Rational> {
    match p.degree() {
        None => Some(Rational::zero()),
        Some(0) => Some(p.coeff(0)),
        Some(_) => None,
    }
}

/// Parses and expands an expression such as `(x - 2)^2 + 2` or
/// `1/2*x^2 + 1/2*x + 1` into canonical dense form.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, ParseError> {
    let mut parser = Parser { toks: tokenize(text)?, at: 0 };
    let p = parser.expr()?;
    match parser.peek() {
        Tok::End => Ok(p),
        Tok::X | Tok::LParen | Tok::Num(_) => Err(syntax(
            parser.pos(),
            format!("unexpected {}; multiplication must be written with `*`", parser.peek().describe()),
        )),
        other => Err(syntax(parser.pos(), format!("unexpected {}", other.describe()))),
    }
}
