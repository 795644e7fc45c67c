//! Canonical text form for polynomials and a parser for it.
//!
//! The grammar (also used for scalar subexpressions in definition files):
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := rational | parameter | '(' poly ')'
//! rational := digits ('/' digits)?
//! ```
//!
//! Printing emits terms in descending monomial order, `^` for powers and `*`
//! between factors, e.g. `k1^2 - k2^2` or `(3/2)*k1*l2`. Fractional
//! coefficients are parenthesized whenever they are followed by a `*`.

use super::{Monomial, Parameter, Polynomial, Rational};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("column {column}: {message}")]
pub struct PolynomialParseError {
    pub column: usize,
    pub message: String,
}

pub(crate) fn monomial_text(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (p, e) in m.exponents() {
        if e == 1 {
            parts.push(p.name().to_string());
        } else {
            parts.push(format!("{}^{}", p.name(), e));
        }
    }
    parts.join("*")
}

fn rational_text(r: &Rational, parenthesize_fraction: bool) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else if parenthesize_fraction {
        format!("({}/{})", r.numer(), r.denom())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// One product `coeff*monomial*label` with the coefficient's absolute value;
/// the sign is the caller's business. `label` extends the product by a
/// trailing basis or tensor label.
pub(crate) fn scaled_text(coeff_abs: &Rational, m: &Monomial, label: Option<&str>) -> String {
    let mut parts: Vec<String> = Vec::new();
    let has_tail = !m.is_one() || label.is_some();
    if !coeff_abs.is_one() || !has_tail {
        parts.push(rational_text(coeff_abs, has_tail));
    }
    if !m.is_one() {
        parts.push(monomial_text(m));
    }
    if let Some(l) = label {
        parts.push(l.to_string());
    }
    parts.join("*")
}

pub(crate) fn polynomial_text(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let negative = c.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&scaled_text(&c.abs(), m, None));
    }
    out
}

/// Parse the canonical polynomial text form. Every identifier is read as a
/// parameter name; declaration checking is the caller's concern.
pub fn parse_polynomial(input: &str) -> Result<Polynomial, PolynomialParseError> {
    let mut parser = Parser::new(input);
    let poly = parser.parse_sum()?;
    parser.skip_ws();
    if let Some((col, c)) = parser.peek() {
        return Err(err(col, format!("unexpected character `{c}`")));
    }
    Ok(poly)
}

fn err(column: usize, message: impl Into<String>) -> PolynomialParseError {
    PolynomialParseError {
        column,
        message: message.into(),
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
    _input: &'a str,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        let chars: Vec<(usize, char)> = input
            .char_indices()
            .map(|(i, c)| (i + 1, c)) // 1-based columns
            .collect();
        Parser {
            len: chars.len(),
            chars,
            pos: 0,
            _input: input,
        }
    }

    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<(usize, char)> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some((_, c)) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, want: char) -> bool {
        self.skip_ws();
        if matches!(self.peek(), Some((_, c)) if c == want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|(i, _)| *i)
            .unwrap_or(self.len + 1)
    }

    fn parse_sum(&mut self) -> Result<Polynomial, PolynomialParseError> {
        let mut negate = false;
        self.skip_ws();
        if self.eat('-') {
            negate = true;
        } else {
            self.eat('+');
        }
        let mut total = self.parse_term()?;
        if negate {
            total = -&total;
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some((_, '+')) => {
                    self.bump();
                    let t = self.parse_term()?;
                    total = &total + &t;
                }
                Some((_, '-')) => {
                    self.bump();
                    let t = self.parse_term()?;
                    total = &total - &t;
                }
                _ => return Ok(total),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Polynomial, PolynomialParseError> {
        let mut product = self.parse_factor()?;
        while self.eat('*') {
            let f = self.parse_factor()?;
            product = &product * &f;
        }
        Ok(product)
    }

    fn parse_factor(&mut self) -> Result<Polynomial, PolynomialParseError> {
        let base = self.parse_atom()?;
        if self.eat('^') {
            self.skip_ws();
            let col = self.column();
            let digits = self.take_digits();
            if digits.is_empty() {
                return Err(err(col, "expected an integer exponent after `^`"));
            }
            let exp: u32 = digits
                .parse()
                .map_err(|_| err(col, "exponent out of range"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<Polynomial, PolynomialParseError> {
        self.skip_ws();
        let col = self.column();
        match self.peek() {
            Some((_, '(')) => {
                self.bump();
                let inner = self.parse_sum()?;
                if !self.eat(')') {
                    return Err(err(self.column(), "expected `)`"));
                }
                Ok(inner)
            }
            Some((_, c)) if c.is_ascii_digit() => {
                let num = self.take_digits();
                let value = if self.eat('/') {
                    let dcol = self.column();
                    let den = self.take_digits();
                    if den.is_empty() {
                        return Err(err(dcol, "expected a denominator"));
                    }
                    let d: num_bigint::BigInt = den.parse().unwrap();
                    if d.is_zero() {
                        return Err(err(dcol, "zero denominator"));
                    }
                    Rational::new(num.parse().unwrap(), d)
                } else {
                    Rational::from_integer(num.parse().unwrap())
                };
                Ok(Polynomial::constant(value))
            }
            Some((_, c)) if c.is_ascii_alphabetic() || c == '_' => {
                let name = self.take_ident();
                Ok(Polynomial::term(
                    Monomial::parameter(Parameter::new(name)),
                    Rational::one(),
                ))
            }
            Some((_, c)) => Err(err(col, format!("unexpected character `{c}`"))),
            None => Err(err(col, "unexpected end of input")),
        }
    }

    fn take_digits(&mut self) -> String {
        let mut out = String::new();
        while let Some((_, c)) = self.peek() {
            if c.is_ascii_digit() {
                out.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        out
    }

    fn take_ident(&mut self) -> String {
        let mut out = String::new();
        while let Some((_, c)) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                out.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        out
    }
}
