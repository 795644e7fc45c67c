//! Finite-dimensional structure-constant algebras over the polynomial
//! scalar ring, their elements, and tensor-product elements.
//!
//! An algebra is given by an ordered basis, a full multiplication table
//! (basis x basis -> element) and a designated unit element. Nothing is
//! assumed about the table: associativity and the unit laws are verified by
//! [`StructureAlgebra::check_associative`] and
//! [`StructureAlgebra::check_unital`] rather than trusted.

use crate::report::{CheckEntry, VerificationReport};
use crate::symbolic::{scaled_text, Parameter, Polynomial, Rational};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("elements of `{left}` and `{right}` cannot be combined")]
    Mismatch { left: String, right: String },
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("algebra `{algebra}`: {message}")]
    InvalidData { algebra: String, message: String },
}

/// A finite-dimensional algebra presented by structure constants.
///
/// Immutable after construction; share it through an [`Arc`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureAlgebra {
    name: String,
    basis: Vec<String>,
    unit: Vec<Polynomial>,
    /// `table[i][j]` holds the coordinates of `basis[i] * basis[j]`.
    table: Vec<Vec<Vec<Polynomial>>>,
}

impl StructureAlgebra {
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        unit: Vec<Polynomial>,
        table: Vec<Vec<Vec<Polynomial>>>,
    ) -> Result<Self, AlgebraError> {
        let name = name.into();
        let invalid = |message: String| AlgebraError::InvalidData {
            algebra: name.clone(),
            message,
        };
        if basis.is_empty() {
            return Err(invalid("empty basis".into()));
        }
        for (i, label) in basis.iter().enumerate() {
            if basis[..i].contains(label) {
                return Err(invalid(format!("duplicate basis label `{label}`")));
            }
        }
        let dim = basis.len();
        if unit.len() != dim {
            return Err(invalid("unit has the wrong number of coordinates".into()));
        }
        if table.len() != dim
            || table
                .iter()
                .any(|row| row.len() != dim || row.iter().any(|e| e.len() != dim))
        {
            return Err(invalid("multiplication table is not basis x basis".into()));
        }
        Ok(StructureAlgebra {
            name,
            basis,
            unit,
            table,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    pub fn unit_coords(&self) -> &[Polynomial] {
        &self.unit
    }

    /// Coordinates of `basis[i] * basis[j]`.
    pub fn product_coords(&self, i: usize, j: usize) -> &[Polynomial] {
        &self.table[i][j]
    }

    /// Bilinear extension of the table on raw coordinate vectors.
    pub(crate) fn mul_coords(&self, x: &[Polynomial], y: &[Polynomial]) -> Vec<Polynomial> {
        let dim = self.dim();
        let mut out = vec![Polynomial::zero(); dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] = &out[k] + &(&c * t);
                    }
                }
            }
        }
        out
    }

    pub(crate) fn render_coords(&self, coords: &[Polynomial]) -> String {
        render_with_labels(coords.iter().enumerate().map(|(i, p)| (p, self.label(i))))
    }

    /// Checks `(bi bj) bk = bi (bj bk)` for every basis triple.
    pub fn check_associative(self: &Arc<Self>) -> VerificationReport {
        let dim = self.dim();
        let mut triples = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    triples.push((i, j, k));
                }
            }
        }
        let entries: Vec<CheckEntry> = triples
            .par_iter()
            .map(|&(i, j, k)| {
                let basis_k: Vec<Polynomial> = basis_coords(dim, k);
                let basis_i: Vec<Polynomial> = basis_coords(dim, i);
                let lhs = self.mul_coords(&self.table[i][j], &basis_k);
                let rhs = self.mul_coords(&basis_i, &self.table[j][k]);
                CheckEntry {
                    tuple: vec![
                        self.label(i).to_string(),
                        self.label(j).to_string(),
                        self.label(k).to_string(),
                    ],
                    passed: lhs == rhs,
                    lhs: self.render_coords(&lhs),
                    rhs: self.render_coords(&rhs),
                }
            })
            .collect();
        VerificationReport::new("associativity", entries)
    }

    /// Checks `unit * bi = bi` and `bi * unit = bi` for every basis element.
    pub fn check_unital(self: &Arc<Self>) -> VerificationReport {
        let dim = self.dim();
        let mut entries = Vec::with_capacity(2 * dim);
        for side in ["left", "right"] {
            for i in 0..dim {
                let basis_i = basis_coords(dim, i);
                let got = if side == "left" {
                    self.mul_coords(&self.unit, &basis_i)
                } else {
                    self.mul_coords(&basis_i, &self.unit)
                };
                entries.push(CheckEntry {
                    tuple: vec![side.to_string(), self.label(i).to_string()],
                    passed: got == basis_i,
                    lhs: self.render_coords(&got),
                    rhs: self.render_coords(&basis_i),
                });
            }
        }
        VerificationReport::new("unitality", entries)
    }
}

fn basis_coords(dim: usize, i: usize) -> Vec<Polynomial> {
    let mut coords = vec![Polynomial::zero(); dim];
    coords[i] = Polynomial::one();
    coords
}

fn render_with_labels<'a>(terms: impl Iterator<Item = (&'a Polynomial, &'a str)>) -> String {
    let mut out = String::new();
    let mut first = true;
    for (p, label) in terms {
        if p.is_zero() {
            continue;
        }
        let (negative, body) = match p.single_term() {
            Some((m, c)) => {
                use num_traits::Signed;
                (c.is_negative(), scaled_text(&c.abs(), m, Some(label)))
            }
            None => (false, format!("({p})*{label}")),
        };
        if first {
            if negative {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// An element of a [`StructureAlgebra`]: one polynomial coordinate per basis
/// label. Equality is coordinate-wise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    algebra: Arc<StructureAlgebra>,
    coords: Vec<Polynomial>,
}

impl AlgebraElement {
    pub fn new(algebra: &Arc<StructureAlgebra>, coords: Vec<Polynomial>) -> Self {
        assert_eq!(coords.len(), algebra.dim(), "coordinate count != dimension");
        AlgebraElement {
            algebra: Arc::clone(algebra),
            coords,
        }
    }

    pub fn zero(algebra: &Arc<StructureAlgebra>) -> Self {
        Self::new(algebra, vec![Polynomial::zero(); algebra.dim()])
    }

    pub fn unit(algebra: &Arc<StructureAlgebra>) -> Self {
        Self::new(algebra, algebra.unit_coords().to_vec())
    }

    pub fn basis(algebra: &Arc<StructureAlgebra>, i: usize) -> Self {
        Self::new(algebra, basis_coords(algebra.dim(), i))
    }

    pub fn from_label(algebra: &Arc<StructureAlgebra>, label: &str) -> Result<Self, AlgebraError> {
        let i = algebra
            .index_of(label)
            .ok_or_else(|| AlgebraError::UnknownLabel(label.to_string()))?;
        Ok(Self::basis(algebra, i))
    }

    pub fn algebra(&self) -> &Arc<StructureAlgebra> {
        &self.algebra
    }

    pub fn coords(&self) -> &[Polynomial] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Polynomial {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Polynomial::is_zero)
    }

    pub fn same_algebra(&self, other: &AlgebraElement) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra
    }

    fn mismatch(&self, other: &AlgebraElement) -> AlgebraError {
        AlgebraError::Mismatch {
            left: self.algebra.name().to_string(),
            right: other.algebra.name().to_string(),
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        self.checked_add(other).expect("algebra mismatch")
    }

    pub fn checked_add(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        if !self.same_algebra(other) {
            return Err(self.mismatch(other));
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(AlgebraElement::new(&self.algebra, coords))
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement::new(&self.algebra, self.coords.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &Polynomial) -> AlgebraElement {
        AlgebraElement::new(&self.algebra, self.coords.iter().map(|x| x * c).collect())
    }

    /// Bilinear extension of the multiplication table.
    pub fn mul(&self, other: &AlgebraElement) -> AlgebraElement {
        self.checked_mul(other).expect("algebra mismatch")
    }

    pub fn checked_mul(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        if !self.same_algebra(other) {
            return Err(self.mismatch(other));
        }
        let coords = self.algebra.mul_coords(&self.coords, &other.coords);
        Ok(AlgebraElement::new(&self.algebra, coords))
    }

    pub fn pow(&self, n: u32) -> AlgebraElement {
        let mut out = AlgebraElement::unit(&self.algebra);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn substitute(&self, assignment: &BTreeMap<Parameter, Rational>) -> AlgebraElement {
        AlgebraElement::new(
            &self.algebra,
            self.coords
                .iter()
                .map(|c| c.substitute(assignment))
                .collect(),
        )
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.algebra.render_coords(&self.coords))
    }
}

/// An element of the tensor product of two structure algebras, stored as a
/// sparse map from basis-label pairs to polynomial coordinates. Zero
/// coordinates are never stored, so equality is coordinate-wise and the
/// iteration order over terms is canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    left: Arc<StructureAlgebra>,
    right: Arc<StructureAlgebra>,
    coords: BTreeMap<(usize, usize), Polynomial>,
}

impl TensorElement {
    pub fn zero(left: &Arc<StructureAlgebra>, right: &Arc<StructureAlgebra>) -> Self {
        TensorElement {
            left: Arc::clone(left),
            right: Arc::clone(right),
            coords: BTreeMap::new(),
        }
    }

    pub fn basis_pair(
        left: &Arc<StructureAlgebra>,
        right: &Arc<StructureAlgebra>,
        i: usize,
        j: usize,
    ) -> Self {
        let mut t = Self::zero(left, right);
        t.add_term(i, j, Polynomial::one());
        t
    }

    pub fn left_algebra(&self) -> &Arc<StructureAlgebra> {
        &self.left
    }

    pub fn right_algebra(&self) -> &Arc<StructureAlgebra> {
        &self.right
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Nonzero coordinates in canonical (left index, right index) order.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &Polynomial)> {
        self.coords.iter().map(|(&k, v)| (k, v))
    }

    pub fn coord(&self, i: usize, j: usize) -> Polynomial {
        self.coords.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: Polynomial) {
        if c.is_zero() {
            return;
        }
        match self.coords.entry((i, j)) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// Adds `c * (x (x) y)` for elements `x` of the left and `y` of the
    /// right factor.
    pub fn add_scaled_outer(&mut self, x: &AlgebraElement, y: &AlgebraElement, c: &Polynomial) {
        if c.is_zero() {
            return;
        }
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                self.add_term(i, j, &(xi * yj) * c);
            }
        }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for ((i, j), c) in other.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for ((i, j), c) in other.terms() {
            out.add_term(i, j, -c);
        }
        out
    }

    pub fn scale(&self, c: &Polynomial) -> TensorElement {
        let mut out = Self::zero(&self.left, &self.right);
        for ((i, j), v) in self.terms() {
            out.add_term(i, j, v * c);
        }
        out
    }

    pub fn substitute(&self, assignment: &BTreeMap<Parameter, Rational>) -> TensorElement {
        let mut out = Self::zero(&self.left, &self.right);
        for ((i, j), v) in self.terms() {
            out.add_term(i, j, v.substitute(assignment));
        }
        out
    }

    /// Dense row-major coordinate vector of length `dim(left) * dim(right)`.
    pub fn to_vec(&self) -> Vec<Polynomial> {
        let cols = self.right.dim();
        let mut out = vec![Polynomial::zero(); self.left.dim() * cols];
        for ((i, j), c) in self.terms() {
            out[i * cols + j] = c.clone();
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<(String, &Polynomial)> = self
            .terms()
            .map(|((i, j), c)| {
                (
                    format!("{}(x){}", self.left.label(i), self.right.label(j)),
                    c,
                )
            })
            .collect();
        f.write_str(&render_with_labels(
            labels.iter().map(|(l, c)| (*c, l.as_str())),
        ))
    }
}

#[cfg(test)]
mod tests;
