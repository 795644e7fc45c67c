//! Tokenizer, expression AST and evaluator shared by the definition-file
//! parser and the `eval` command.
//!
//! Expression grammar:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := pair ('^' integer)?
//! pair   := atom (':' atom)?
//! atom   := number | ident | ident '(' expr ',' expr ')' | '(' expr ')'
//! number := digits ('/' digits)?
//! ```
//!
//! Identifiers resolve to declared parameters or to basis labels of the
//! algebras in scope; `a:b` forms a tensor pair (used by `delta` lines);
//! `act`, `omega` and `sharp` are the built-in binary maps of an action.
//! A scalar placed where an element is expected is coerced through the
//! declared unit of the expected algebra.

use super::{ParseError, Pos};
use crate::algebra::{AlgebraElement, AlgebraError, StructureAlgebra, TensorElement};
use crate::crossed_product::{smash_from_tensor, smash_mul};
use crate::partial_action::PartialActionData;
use crate::symbolic::{Polynomial, Rational};
use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum TokenKind {
    Ident(String),
    Number(String),
    Str(String),
    Sym(char),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Token {
    pub kind: TokenKind,
    pub pos: Pos,
}

impl Token {
    /// The token text when it can serve as a basis label: an identifier or
    /// a bare number such as `1`.
    pub fn as_label(&self) -> Option<&str> {
        match &self.kind {
            TokenKind::Ident(s) => Some(s),
            TokenKind::Number(s) if !s.contains('/') => Some(s),
            _ => None,
        }
    }

    pub fn describe(&self) -> String {
        match &self.kind {
            TokenKind::Ident(s) => format!("`{s}`"),
            TokenKind::Number(s) => format!("`{s}`"),
            TokenKind::Str(_) => "string".to_string(),
            TokenKind::Sym(c) => format!("`{c}`"),
        }
    }
}

/// Tokenizes one line; `#` starts a comment running to the end of the line.
pub(crate) fn tokenize_line(line: &str, line_no: usize) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos {
            line: line_no,
            col: i + 1,
        };
        if c.is_whitespace() {
            i += 1;
        } else if c == '#' {
            break;
        } else if c == '"' {
            let start = i + 1;
            let mut j = start;
            while j < chars.len() && chars[j] != '"' {
                j += 1;
            }
            if j == chars.len() {
                return Err(ParseError::Syntax {
                    pos,
                    message: "unterminated string".into(),
                });
            }
            tokens.push(Token {
                kind: TokenKind::Str(chars[start..j].iter().collect()),
                pos,
            });
            i = j + 1;
        } else if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            // A '/' directly between digit runs belongs to the rational.
            if j < chars.len()
                && chars[j] == '/'
                && j + 1 < chars.len()
                && chars[j + 1].is_ascii_digit()
            {
                j += 1;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
            }
            tokens.push(Token {
                kind: TokenKind::Number(chars[i..j].iter().collect()),
                pos,
            });
            i = j;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut j = i;
            while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                j += 1;
            }
            tokens.push(Token {
                kind: TokenKind::Ident(chars[i..j].iter().collect()),
                pos,
            });
            i = j;
        } else if "{}()=+-*^:,".contains(c) {
            tokens.push(Token {
                kind: TokenKind::Sym(c),
                pos,
            });
            i += 1;
        } else {
            return Err(ParseError::Syntax {
                pos,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(tokens)
}

#[derive(Debug, Clone)]
pub(crate) enum Expr {
    Number(Rational, Pos),
    Ident(String, Pos),
    Call(String, Vec<Expr>, Pos),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>, Pos),
    Pow(Box<Expr>, u32, Pos),
    Pair(Box<Expr>, Box<Expr>, Pos),
}

impl Expr {
    pub fn pos(&self) -> Pos {
        match self {
            Expr::Number(_, p) | Expr::Ident(_, p) | Expr::Call(_, _, p) => *p,
            Expr::Neg(e) => e.pos(),
            Expr::Add(a, _) | Expr::Sub(a, _) => a.pos(),
            Expr::Mul(_, _, p) | Expr::Pow(_, _, p) | Expr::Pair(_, _, p) => *p,
        }
    }
}

/// Parses a full expression from a token slice; all tokens must be consumed.
pub(crate) fn parse_expr(tokens: &[Token], end_pos: Pos) -> Result<Expr, ParseError> {
    let mut p = ExprParser {
        tokens,
        idx: 0,
        end_pos,
    };
    let e = p.sum()?;
    if p.idx != tokens.len() {
        let t = &tokens[p.idx];
        return Err(ParseError::Syntax {
            pos: t.pos,
            message: format!("unexpected {}", t.describe()),
        });
    }
    Ok(e)
}

struct ExprParser<'a> {
    tokens: &'a [Token],
    idx: usize,
    end_pos: Pos,
}

impl<'a> ExprParser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.idx)
    }

    fn pos(&self) -> Pos {
        self.peek().map(|t| t.pos).unwrap_or(self.end_pos)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if matches!(self.peek(), Some(t) if t.kind == TokenKind::Sym(c)) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut acc = if self.eat_sym('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.eat_sym('+');
            self.term()?
        };
        loop {
            if self.eat_sym('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat_sym('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        loop {
            let pos = self.pos();
            if self.eat_sym('*') {
                acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?), pos);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.pair()?;
        let pos = self.pos();
        if self.eat_sym('^') {
            match self.peek().cloned() {
                Some(Token {
                    kind: TokenKind::Number(s),
                    pos: npos,
                }) if !s.contains('/') => {
                    self.idx += 1;
                    let n: u32 = s.parse().map_err(|_| ParseError::Syntax {
                        pos: npos,
                        message: "exponent out of range".into(),
                    })?;
                    return Ok(Expr::Pow(Box::new(base), n, pos));
                }
                _ => {
                    return Err(ParseError::Syntax {
                        pos: self.pos(),
                        message: "expected an integer exponent after `^`".into(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn pair(&mut self) -> Result<Expr, ParseError> {
        let left = self.atom()?;
        let pos = self.pos();
        if self.eat_sym(':') {
            let right = self.atom()?;
            return Ok(Expr::Pair(Box::new(left), Box::new(right), pos));
        }
        Ok(left)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let tok = match self.peek().cloned() {
            Some(t) => t,
            None => {
                return Err(ParseError::Syntax {
                    pos: self.end_pos,
                    message: "unexpected end of expression".into(),
                })
            }
        };
        match tok.kind {
            TokenKind::Number(s) => {
                self.idx += 1;
                let value = match s.split_once('/') {
                    Some((n, d)) => {
                        let den: num_bigint::BigInt = d.parse().unwrap();
                        if den.is_zero() {
                            return Err(ParseError::Syntax {
                                pos: tok.pos,
                                message: "zero denominator".into(),
                            });
                        }
                        Rational::new(n.parse().unwrap(), den)
                    }
                    None => Rational::from_integer(s.parse().unwrap()),
                };
                Ok(Expr::Number(value, tok.pos))
            }
            TokenKind::Ident(name) => {
                self.idx += 1;
                if self.eat_sym('(') {
                    let mut args = vec![self.sum()?];
                    while self.eat_sym(',') {
                        args.push(self.sum()?);
                    }
                    if !self.eat_sym(')') {
                        return Err(ParseError::Syntax {
                            pos: self.pos(),
                            message: "expected `)` or `,`".into(),
                        });
                    }
                    Ok(Expr::Call(name, args, tok.pos))
                } else {
                    Ok(Expr::Ident(name, tok.pos))
                }
            }
            TokenKind::Sym('(') => {
                self.idx += 1;
                let inner = self.sum()?;
                if !self.eat_sym(')') {
                    return Err(ParseError::Syntax {
                        pos: self.pos(),
                        message: "expected `)`".into(),
                    });
                }
                Ok(inner)
            }
            _ => Err(ParseError::Syntax {
                pos: tok.pos,
                message: format!("unexpected {}", tok.describe()),
            }),
        }
    }
}

/// A fully evaluated expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Scalar(Polynomial),
    Elem(AlgebraElement),
    Tensor(TensorElement),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(p) => p.fmt(f),
            Value::Elem(e) => e.fmt(f),
            Value::Tensor(t) => t.fmt(f),
        }
    }
}

/// Name resolution scope for expression evaluation.
pub struct EvalContext<'a> {
    pub parameters: &'a BTreeSet<String>,
    /// Default algebra for bare labels (the target algebra of an action, or
    /// the block's own algebra inside a definition block).
    pub primary: &'a Arc<StructureAlgebra>,
    /// The Hopf algebra of an action, when one is in scope.
    pub secondary: Option<&'a Arc<StructureAlgebra>>,
    /// Enables `act`, `omega`, `sharp` and products of sharp elements.
    pub action: Option<&'a PartialActionData>,
}

impl<'a> EvalContext<'a> {
    fn algebra_err(&self, pos: Pos, err: AlgebraError) -> ParseError {
        ParseError::Eval {
            pos,
            message: err.to_string(),
        }
    }

    fn expect_elem(
        &self,
        value: Value,
        algebra: &Arc<StructureAlgebra>,
        pos: Pos,
    ) -> Result<AlgebraElement, ParseError> {
        match value {
            Value::Scalar(s) => Ok(AlgebraElement::unit(algebra).scale(&s)),
            Value::Elem(e) => {
                if e.algebra() == algebra {
                    Ok(e)
                } else {
                    Err(self.algebra_err(
                        pos,
                        AlgebraError::Mismatch {
                            left: e.algebra().name().to_string(),
                            right: algebra.name().to_string(),
                        },
                    ))
                }
            }
            Value::Tensor(_) => Err(ParseError::Eval {
                pos,
                message: "expected an algebra element, found a tensor".into(),
            }),
        }
    }

    fn resolve_label(&self, name: &str, hint: Option<&Arc<StructureAlgebra>>) -> Option<Value> {
        let primary_hit = self.primary.index_of(name);
        let secondary_hit = self
            .secondary
            .and_then(|alg| alg.index_of(name).map(|i| (alg, i)));
        match (primary_hit, secondary_hit) {
            (Some(i), None) => Some(Value::Elem(AlgebraElement::basis(self.primary, i))),
            (None, Some((alg, i))) => Some(Value::Elem(AlgebraElement::basis(alg, i))),
            (Some(pi), Some((salg, si))) => {
                // Ambiguous label: the expected algebra decides.
                if let Some(h) = hint {
                    if h == salg {
                        return Some(Value::Elem(AlgebraElement::basis(salg, si)));
                    }
                }
                Some(Value::Elem(AlgebraElement::basis(self.primary, pi)))
            }
            (None, None) => None,
        }
    }

    pub(crate) fn eval(
        &self,
        expr: &Expr,
        hint: Option<&Arc<StructureAlgebra>>,
    ) -> Result<Value, ParseError> {
        match expr {
            Expr::Number(r, _) => Ok(Value::Scalar(Polynomial::constant(r.clone()))),
            Expr::Ident(name, pos) => {
                if self.parameters.contains(name) {
                    return Ok(Value::Scalar(Polynomial::parameter(name.clone())));
                }
                self.resolve_label(name, hint)
                    .ok_or_else(|| ParseError::UndeclaredParameter {
                        name: name.clone(),
                        pos: *pos,
                    })
            }
            Expr::Neg(inner) => Ok(match self.eval(inner, hint)? {
                Value::Scalar(p) => Value::Scalar(-&p),
                Value::Elem(e) => Value::Elem(e.neg()),
                Value::Tensor(t) => Value::Tensor(t.scale(&Polynomial::integer(-1))),
            }),
            Expr::Add(a, b) => {
                let pos = b.pos();
                self.combine(self.eval(a, hint)?, self.eval(b, hint)?, false, pos)
            }
            Expr::Sub(a, b) => {
                let pos = b.pos();
                self.combine(self.eval(a, hint)?, self.eval(b, hint)?, true, pos)
            }
            Expr::Mul(a, b, pos) => self.multiply(self.eval(a, hint)?, self.eval(b, hint)?, *pos),
            Expr::Pow(base, n, pos) => match self.eval(base, hint)? {
                Value::Scalar(p) => Ok(Value::Scalar(p.pow(*n))),
                Value::Elem(e) => Ok(Value::Elem(e.pow(*n))),
                Value::Tensor(t) => {
                    let action = self.action.ok_or_else(|| ParseError::Eval {
                        pos: *pos,
                        message: "tensor powers need an action in scope".into(),
                    })?;
                    let unit = smash_from_tensor(unit_tensor(action));
                    let mut acc = unit;
                    let base = smash_from_tensor(t);
                    for _ in 0..*n {
                        acc = smash_mul(action, &acc, &base);
                    }
                    Ok(Value::Tensor(acc.tensor().clone()))
                }
            },
            Expr::Pair(a, b, pos) => {
                let left = self.expect_elem(self.eval(a, hint)?, self.primary, *pos)?;
                let right = self.expect_elem(self.eval(b, hint)?, self.primary, *pos)?;
                let mut t = TensorElement::zero(self.primary, self.primary);
                t.add_scaled_outer(&left, &right, &Polynomial::one());
                Ok(Value::Tensor(t))
            }
            Expr::Call(name, args, pos) => self.call(name, args, *pos),
        }
    }

    fn combine(&self, a: Value, b: Value, subtract: bool, pos: Pos) -> Result<Value, ParseError> {
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => {
                Ok(Value::Scalar(if subtract { &x - &y } else { &x + &y }))
            }
            (Value::Tensor(x), Value::Tensor(y)) => {
                if x.left_algebra() != y.left_algebra() || x.right_algebra() != y.right_algebra() {
                    return Err(ParseError::Eval {
                        pos,
                        message: "tensor terms live over different algebras".into(),
                    });
                }
                Ok(Value::Tensor(if subtract { x.sub(&y) } else { x.add(&y) }))
            }
            (Value::Elem(x), Value::Elem(y)) => {
                let y = if subtract { y.neg() } else { y };
                x.checked_add(&y)
                    .map(Value::Elem)
                    .map_err(|e| self.algebra_err(pos, e))
            }
            (Value::Elem(x), Value::Scalar(s)) => {
                let y = AlgebraElement::unit(x.algebra()).scale(&s);
                let y = if subtract { y.neg() } else { y };
                Ok(Value::Elem(x.add(&y)))
            }
            (Value::Scalar(s), Value::Elem(y)) => {
                let x = AlgebraElement::unit(y.algebra()).scale(&s);
                let y = if subtract { y.neg() } else { y };
                Ok(Value::Elem(x.add(&y)))
            }
            _ => Err(ParseError::Eval {
                pos,
                message: "cannot add a tensor to a non-tensor".into(),
            }),
        }
    }

    fn multiply(&self, a: Value, b: Value, pos: Pos) -> Result<Value, ParseError> {
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x * &y)),
            (Value::Scalar(s), Value::Elem(e)) | (Value::Elem(e), Value::Scalar(s)) => {
                Ok(Value::Elem(e.scale(&s)))
            }
            (Value::Scalar(s), Value::Tensor(t)) | (Value::Tensor(t), Value::Scalar(s)) => {
                Ok(Value::Tensor(t.scale(&s)))
            }
            (Value::Elem(x), Value::Elem(y)) => x
                .checked_mul(&y)
                .map(Value::Elem)
                .map_err(|e| self.algebra_err(pos, e)),
            (Value::Tensor(x), Value::Tensor(y)) => {
                let action = self.action.ok_or_else(|| ParseError::Eval {
                    pos,
                    message: "tensor products need an action in scope".into(),
                })?;
                if x.left_algebra() != action.target()
                    || x.right_algebra() != action.hopf_algebra()
                    || y.left_algebra() != action.target()
                    || y.right_algebra() != action.hopf_algebra()
                {
                    return Err(ParseError::Eval {
                        pos,
                        message: "only products of sharp elements are defined".into(),
                    });
                }
                let product = smash_mul(
                    action,
                    &smash_from_tensor(x),
                    &smash_from_tensor(y),
                );
                Ok(Value::Tensor(product.tensor().clone()))
            }
            _ => Err(ParseError::Eval {
                pos,
                message: "cannot multiply an element by a tensor".into(),
            }),
        }
    }

    fn call(&self, name: &str, args: &[Expr], pos: Pos) -> Result<Value, ParseError> {
        let action = self.action.ok_or_else(|| ParseError::Eval {
            pos,
            message: format!("`{name}` needs an action in scope"),
        })?;
        let hopf = action.hopf_algebra();
        let target = action.target();
        let two_args = |args: &[Expr]| -> Result<(), ParseError> {
            if args.len() != 2 {
                return Err(ParseError::Eval {
                    pos,
                    message: format!("`{name}` takes exactly two arguments"),
                });
            }
            Ok(())
        };
        match name {
            "act" => {
                two_args(args)?;
                let h = self.expect_elem(self.eval(&args[0], Some(hopf))?, hopf, args[0].pos())?;
                let a =
                    self.expect_elem(self.eval(&args[1], Some(target))?, target, args[1].pos())?;
                action
                    .act(&h, &a)
                    .map(Value::Elem)
                    .map_err(|e| self.algebra_err(pos, e))
            }
            "omega" => {
                two_args(args)?;
                let h = self.expect_elem(self.eval(&args[0], Some(hopf))?, hopf, args[0].pos())?;
                let l = self.expect_elem(self.eval(&args[1], Some(hopf))?, hopf, args[1].pos())?;
                action
                    .cocycle(&h, &l)
                    .map(Value::Elem)
                    .map_err(|e| self.algebra_err(pos, e))
            }
            "sharp" => {
                two_args(args)?;
                let a =
                    self.expect_elem(self.eval(&args[0], Some(target))?, target, args[0].pos())?;
                let h = self.expect_elem(self.eval(&args[1], Some(hopf))?, hopf, args[1].pos())?;
                let mut out = TensorElement::zero(target, hopf);
                for (ai, ac) in a.coords().iter().enumerate() {
                    if ac.is_zero() {
                        continue;
                    }
                    for (hi, hc) in h.coords().iter().enumerate() {
                        if hc.is_zero() {
                            continue;
                        }
                        let gen = crate::crossed_product::smash_of(action, ai, hi);
                        out = out.add(&gen.tensor().scale(&(ac * hc)));
                    }
                }
                Ok(Value::Tensor(out))
            }
            _ => Err(ParseError::Eval {
                pos,
                message: format!("unknown function `{name}`"),
            }),
        }
    }
}

fn unit_tensor(action: &PartialActionData) -> TensorElement {
    let mut t = TensorElement::zero(action.target(), action.hopf_algebra());
    t.add_scaled_outer(
        &AlgebraElement::unit(action.target()),
        &AlgebraElement::unit(action.hopf_algebra()),
        &Polynomial::one(),
    );
    t
}
