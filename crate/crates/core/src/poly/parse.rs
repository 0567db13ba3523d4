//! Recursive-descent parser for the polynomial text form.
//!
//! ```text
//! expr   := ['-'|'+'] term { ('+'|'-') term }
//! term   := factor { ['*'] factor | '/' factor }
//! factor := integer | var ['^' integer] | '(' expr ')' ['^' integer]
//! var    := 'x' | 'y' | 'z' | 't'
//! ```
//!
//! A divisor must be a nonzero monomial in the Laurent variables `x`, `t`
//! (integers included, so `1/2` reads as a rational).

use num_bigint::BigInt;
use thiserror::Error;

use super::{LaurentPoly, Rational, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

pub fn parse(text: &str) -> Result<LaurentPoly, ParseError> {
    let mut parser = Parser { chars: text.chars().collect(), pos: 0 };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.chars.len() {
        return Err(parser.error(format!("unexpected `{}`", parser.chars[parser.pos])));
    }
    Ok(p)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { pos: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut negate = false;
        if self.eat('-') {
            negate = true;
        } else {
            self.eat('+');
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            if self.eat('+') {
                acc += &self.term()?;
            } else if self.eat('-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.product(&acc, &f)?;
                }
                Some('/') => {
                    self.pos += 1;
                    let start = self.pos;
                    let d = self.factor()?;
                    let inv = invert_divisor(&d).map_err(|m| ParseError { pos: start, message: m })?;
                    acc = self.product(&acc, &inv)?;
                }
                Some(c) if starts_factor(c) => {
                    let f = self.factor()?;
                    acc = self.product(&acc, &f)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&self, a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly, ParseError> {
        a.try_mul(b).map_err(|e| self.error(e.to_string()))
    }

    fn factor(&mut self) -> Result<LaurentPoly, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.unsigned()?;
                Ok(LaurentPoly::constant(Rational::from_integer(n)))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                if self.eat('^') {
                    let at = self.pos;
                    let k = self.exponent()?;
                    return inner.powi(k).map_err(|e| ParseError { pos: at, message: e.to_string() });
                }
                Ok(inner)
            }
            Some(c) => {
                let Some(v) = Var::from_char(c) else {
                    return Err(self.error(format!("unexpected `{c}`")));
                };
                self.pos += 1;
                let mut k = 1;
                if self.eat('^') {
                    k = self.exponent()?;
                }
                LaurentPoly::var_pow(v, k).map_err(|e| self.error(e.to_string()))
            }
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn unsigned(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits parse as an integer"))
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let negative = self.eat('-');
        let at = self.pos;
        let n = self.unsigned()?;
        let n: i64 = n.try_into().map_err(|_| ParseError { pos: at, message: "exponent out of range".into() })?;
        Ok(if negative { -n } else { n })
    }
}

fn starts_factor(c: char) -> bool {
    c.is_ascii_digit() || c == '(' || Var::from_char(c).is_some()
}

fn invert_divisor(d: &LaurentPoly) -> Result<LaurentPoly, String> {
    let Some((e, _)) = d.as_monomial() else {
        return Err(if d.is_zero() { "division by zero".to_string() } else { format!("division by the non-monomial `{d}`") });
    };
    if e.y != 0 || e.z != 0 {
        return Err(format!("division by `{d}`: only x and t may be inverted"));
    }
    d.inverse_monomial().map_err(|e| e.to_string())
}
