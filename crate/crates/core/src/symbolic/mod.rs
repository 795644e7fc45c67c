//! Exact scalar arithmetic: arbitrary-precision rationals and multivariate
//! polynomials in named formal parameters.
//!
//! Every polynomial keeps itself in canonical normal form (no zero
//! coefficients, terms in a fixed monomial order), so identity checking
//! throughout the crate is simply "the normal form of the difference has no
//! terms". Coefficients are exact rationals; there is no floating-point mode.

mod text;

pub use text::{parse_polynomial, PolynomialParseError};
pub(crate) use text::scaled_text;

use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Exact rational scalar: arbitrary-precision, always reduced, positive
/// denominator, zero represented as `0/1`. `num_rational` maintains exactly
/// these invariants.
pub type Rational = num_rational::BigRational;

/// Integer-valued rational, mostly for tests and table data.
pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational from a numerator/denominator pair.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("parameter `{0}` has no value in the assignment")]
    MissingParameter(String),
}

/// A named formal parameter such as `k1` or `l3`.
///
/// Parameters are global indeterminates: they are never bound to values
/// except explicitly through [`Polynomial::eval`] or
/// [`Polynomial::substitute`]. Ordering is lexicographic on the name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Parameter(String);

impl Parameter {
    pub fn new(name: impl Into<String>) -> Self {
        Parameter(name.into())
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Parameter {
    fn from(name: &str) -> Self {
        Parameter::new(name)
    }
}

/// A product of parameter powers; the empty product is the monomial `1`.
/// Zero exponents are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: BTreeMap<Parameter, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn parameter(p: Parameter) -> Self {
        let mut exps = BTreeMap::new();
        exps.insert(p, 1);
        Monomial { exps }
    }

    pub fn power(p: Parameter, e: u32) -> Self {
        let mut exps = BTreeMap::new();
        if e > 0 {
            exps.insert(p, e);
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&Parameter, u32)> {
        self.exps.iter().map(|(p, &e)| (p, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (p, e) in &other.exps {
            *exps.entry(p.clone()).or_insert(0) += e;
        }
        Monomial { exps }
    }

    pub fn pow(&self, n: u32) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        let exps = self.exps.iter().map(|(p, e)| (p.clone(), e * n)).collect();
        Monomial { exps }
    }

    /// Exponent-wise division; `None` when `divisor` does not divide `self`.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        let mut exps = self.exps.clone();
        for (p, e) in &divisor.exps {
            match exps.get_mut(p) {
                Some(mine) if *mine >= *e => {
                    *mine -= e;
                    if *mine == 0 {
                        exps.remove(p);
                    }
                }
                _ => return None,
            }
        }
        Some(Monomial { exps })
    }
}

// Lexicographic order with parameters taken in name order and absent
// parameters read as exponent zero. This is an admissible term order (total,
// multiplicative, with 1 minimal), which is what makes exact polynomial
// division terminate.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut lhs = self.exps.iter();
        let mut rhs = other.exps.iter();
        let mut a = lhs.next();
        let mut b = rhs.next();
        loop {
            match (a, b) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((pa, ea)), Some((pb, eb))) => match pa.cmp(pb) {
                    // The side with a positive exponent at the earlier
                    // parameter is the larger monomial.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            a = lhs.next();
                            b = rhs.next();
                        }
                        unequal => return unequal,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::monomial_text(self))
    }
}

/// Multivariate polynomial over [`Rational`] in named parameters.
///
/// Invariants: no stored term has a zero coefficient, and the term map is
/// keyed by the canonical monomial order, so structural equality is equality
/// of normal forms.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Polynomial::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn integer(n: i64) -> Self {
        Polynomial::constant(rational(n))
    }

    pub fn parameter(name: impl Into<String>) -> Self {
        Polynomial::term(Monomial::parameter(Parameter::new(name)), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// `Some(value)` when the polynomial is constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// The single term of a one-term polynomial.
    pub fn single_term(&self) -> Option<(&Monomial, &Rational)> {
        (self.terms.len() == 1).then(|| self.terms.iter().next().unwrap())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn parameters(&self) -> BTreeSet<Parameter> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            for (p, _) in m.exponents() {
                out.insert(p.clone());
            }
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Exact value at a total assignment of the occurring parameters.
    pub fn eval(&self, assignment: &BTreeMap<Parameter, Rational>) -> Result<Rational, EvalError> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (p, e) in m.exponents() {
                let x = assignment
                    .get(p)
                    .ok_or_else(|| EvalError::MissingParameter(p.name().to_string()))?;
                for _ in 0..e {
                    v *= x;
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Partial specialization: assigned parameters are replaced by their
    /// values, unassigned ones stay formal.
    pub fn substitute(&self, assignment: &BTreeMap<Parameter, Rational>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = BTreeMap::new();
            for (p, e) in m.exponents() {
                match assignment.get(p) {
                    Some(x) => {
                        for _ in 0..e {
                            coeff *= x;
                        }
                    }
                    None => {
                        rest.insert(p.clone(), e);
                    }
                }
            }
            out.add_term(Monomial { exps: rest }, coeff);
        }
        out
    }

    /// Exact polynomial division: `Some(q)` with `self == q * divisor` when
    /// the division leaves no remainder, `None` otherwise.
    ///
    /// Panics when `divisor` is zero.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (dm, dc) = divisor
            .leading_term()
            .expect("division by the zero polynomial");
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading_term().unwrap();
            let qm = rm.checked_div(&dm)?;
            let qc = rc / &dc;
            let qterm = Polynomial::term(qm, qc);
            rem = &rem - &(&qterm * divisor);
            quot = &quot + &qterm;
        }
        Some(quot)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::polynomial_text(self))
    }
}
