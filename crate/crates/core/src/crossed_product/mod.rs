//! The partial crossed product `A # H = (A (x) H)(1_A (x) 1_H)`.
//!
//! Sharp generators `a # h = a (h1 . 1_A) (x) h2` span the crossed product
//! inside `A (x) H`. This module multiplies sharp elements with the product
//! `(a (x) h)(b (x) l) = a (h1 . b) w(h2, l1) (x) h3 l2`, extracts a basis
//! of the span by fraction-free Gaussian elimination (parameters treated as
//! algebraically independent, so the rank is the generic rank), expresses
//! elements in that basis, and tabulates the multiplication.

mod elim;

use crate::algebra::{AlgebraError, TensorElement};
use crate::partial_action::PartialActionData;
use crate::symbolic::Polynomial;
use elim::{bareiss_det, Eliminator};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpanError {
    #[error("element `{element}` is not in the span of the extracted basis")]
    NotInSpan { element: String },
}

/// An element of the crossed product, represented by its underlying tensor
/// in `A (x) H`. Constructed through [`smash_of`] and closed under
/// [`smash_mul`], sums and scalings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmashElement {
    tensor: TensorElement,
}

impl SmashElement {
    pub fn tensor(&self) -> &TensorElement {
        &self.tensor
    }

    pub fn is_zero(&self) -> bool {
        self.tensor.is_zero()
    }

    pub fn add(&self, other: &SmashElement) -> SmashElement {
        SmashElement {
            tensor: self.tensor.add(&other.tensor),
        }
    }

    pub fn sub(&self, other: &SmashElement) -> SmashElement {
        SmashElement {
            tensor: self.tensor.sub(&other.tensor),
        }
    }

    pub fn scale(&self, c: &Polynomial) -> SmashElement {
        SmashElement {
            tensor: self.tensor.scale(c),
        }
    }
}

impl fmt::Display for SmashElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tensor.fmt(f)
    }
}

/// The sharp generator `a # h` for basis indices `a` of the target and `h`
/// of the Hopf algebra.
pub fn smash_of(action: &PartialActionData, a: usize, h: usize) -> SmashElement {
    SmashElement {
        tensor: action.sharp_tensor(a, h),
    }
}

pub fn smash_of_labels(
    action: &PartialActionData,
    a: &str,
    h: &str,
) -> Result<SmashElement, AlgebraError> {
    let ai = action
        .target()
        .index_of(a)
        .ok_or_else(|| AlgebraError::UnknownLabel(a.to_string()))?;
    let hi = action
        .hopf_algebra()
        .index_of(h)
        .ok_or_else(|| AlgebraError::UnknownLabel(h.to_string()))?;
    Ok(smash_of(action, ai, hi))
}

/// Wraps a raw tensor as a smash element; the caller asserts membership in
/// the crossed product (sums of sharp generators).
pub fn smash_from_tensor(tensor: TensorElement) -> SmashElement {
    SmashElement { tensor }
}

/// Product of two crossed-product elements.
pub fn smash_mul(
    action: &PartialActionData,
    x: &SmashElement,
    y: &SmashElement,
) -> SmashElement {
    for t in [&x.tensor, &y.tensor] {
        assert!(
            t.left_algebra() == action.target() && t.right_algebra() == action.hopf_algebra(),
            "smash element does not belong to this action"
        );
    }
    SmashElement {
        tensor: action.tensor_mul(&x.tensor, &y.tensor),
    }
}

/// Basis extraction result: the sharp generators in scan order, the
/// independent subset selected by the elimination, and the solving state
/// used by [`BasisExtraction::express`].
pub struct BasisExtraction {
    /// Generator (target index, hopf index) pairs in scan order: the Hopf
    /// basis outermost, the target basis innermost.
    pairs: Vec<(usize, usize)>,
    generators: Vec<SmashElement>,
    /// Indices into `pairs` of the selected basis, in selection order.
    selected: Vec<usize>,
    /// `(generator index, tensor coordinate column)` per elimination pivot.
    pivots: Vec<(usize, usize)>,
    /// Selected generators restricted to the pivot columns.
    pivot_matrix: Vec<Vec<Polynomial>>,
    /// Determinant of `pivot_matrix`; nonzero by construction.
    det: Polynomial,
    /// Full coordinate vectors of the selected generators.
    selected_vectors: Vec<Vec<Polynomial>>,
    labels: Vec<(String, String)>,
}

/// Stacks all sharp generators and runs fraction-free elimination.
///
/// Generators are scanned with the Hopf basis as the outer loop, so for the
/// built-in examples (where every `a # g` vanishes) the `a # 1` generators
/// claim their pivots before any parameter-dependent `a # nu` row is seen.
pub fn extract_basis(action: &PartialActionData) -> BasisExtraction {
    let dim_a = action.target().dim();
    let dim_h = action.hopf_algebra().dim();
    let cols = dim_a * dim_h;
    let mut pairs = Vec::with_capacity(dim_a * dim_h);
    for h in 0..dim_h {
        for a in 0..dim_a {
            pairs.push((a, h));
        }
    }
    let generators: Vec<SmashElement> = pairs
        .iter()
        .map(|&(a, h)| smash_of(action, a, h))
        .collect();

    let mut eliminator = Eliminator::new(cols);
    let mut selected = Vec::new();
    let mut pivots = Vec::new();
    for (idx, g) in generators.iter().enumerate() {
        if let Some(col) = eliminator.offer(g.tensor().to_vec()) {
            selected.push(idx);
            pivots.push((idx, col));
        }
    }

    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let selected_vectors: Vec<Vec<Polynomial>> = selected
        .iter()
        .map(|&i| generators[i].tensor().to_vec())
        .collect();
    let pivot_matrix: Vec<Vec<Polynomial>> = pivot_cols
        .iter()
        .map(|&c| selected_vectors.iter().map(|v| v[c].clone()).collect())
        .collect();
    let det = bareiss_det(pivot_matrix.clone());
    debug_assert!(!det.is_zero());

    let labels = pairs
        .iter()
        .map(|&(a, h)| {
            (
                action.target().label(a).to_string(),
                action.hopf_algebra().label(h).to_string(),
            )
        })
        .collect();

    BasisExtraction {
        pairs,
        generators,
        selected,
        pivots,
        pivot_matrix,
        det,
        selected_vectors,
        labels,
    }
}

/// A coordinate over the extracted basis: a ratio of polynomials, reduced
/// to a plain polynomial whenever the division is exact.
#[derive(Debug, Clone)]
pub struct Coordinate {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl Coordinate {
    fn new(numerator: Polynomial, denominator: Polynomial) -> Coordinate {
        assert!(!denominator.is_zero());
        if let Some(q) = numerator.exact_div(&denominator) {
            return Coordinate {
                numerator: q,
                denominator: Polynomial::one(),
            };
        }
        Coordinate {
            numerator,
            denominator,
        }
    }

    pub fn zero() -> Coordinate {
        Coordinate {
            numerator: Polynomial::zero(),
            denominator: Polynomial::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// The coordinate as a polynomial, when the denominator divided out.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.denominator.is_one().then_some(&self.numerator)
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }
}

impl PartialEq for Coordinate {
    fn eq(&self, other: &Self) -> bool {
        (&self.numerator * &other.denominator) == (&other.numerator * &self.denominator)
    }
}

impl Eq for Coordinate {}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({})/({})", self.numerator, self.denominator)
        }
    }
}

impl BasisExtraction {
    pub fn rank(&self) -> usize {
        self.selected.len()
    }

    /// All generator pairs in scan order.
    pub fn generator_pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn generator_labels(&self) -> &[(String, String)] {
        &self.labels
    }

    pub fn generator(&self, idx: usize) -> &SmashElement {
        &self.generators[idx]
    }

    /// Indices (into the generator list) of the selected basis.
    pub fn selected(&self) -> &[usize] {
        &self.selected
    }

    pub fn selected_pairs(&self) -> Vec<(usize, usize)> {
        self.selected.iter().map(|&i| self.pairs[i]).collect()
    }

    pub fn selected_labels(&self) -> Vec<(String, String)> {
        self.selected.iter().map(|&i| self.labels[i].clone()).collect()
    }

    /// The elimination trace: `(generator index, pivot column)` pairs in
    /// pivot order.
    pub fn pivots(&self) -> &[(usize, usize)] {
        &self.pivots
    }

    /// Unique coordinates of `x` over the selected basis, by Cramer's rule
    /// on the pivot columns followed by verification of the full system
    /// (which is what detects elements outside the span).
    pub fn express(&self, x: &SmashElement) -> Result<Vec<Coordinate>, SpanError> {
        let xv = x.tensor().to_vec();
        let rank = self.rank();
        let b: Vec<&Polynomial> = self.pivots.iter().map(|&(_, c)| &xv[c]).collect();

        let mut dets = Vec::with_capacity(rank);
        for j in 0..rank {
            let mut m = self.pivot_matrix.clone();
            for (r, row) in m.iter_mut().enumerate() {
                row[j] = b[r].clone();
            }
            dets.push(bareiss_det(m));
        }

        // Clear denominators: sum_j det_j * v_j must equal det * x.
        let cols = xv.len();
        for c in 0..cols {
            let mut lhs = Polynomial::zero();
            for (j, d) in dets.iter().enumerate() {
                if !d.is_zero() {
                    lhs = &lhs + &(d * &self.selected_vectors[j][c]);
                }
            }
            let rhs = &self.det * &xv[c];
            if lhs != rhs {
                return Err(SpanError::NotInSpan {
                    element: x.to_string(),
                });
            }
        }

        Ok(dets
            .into_iter()
            .map(|d| Coordinate::new(d, self.det.clone()))
            .collect())
    }
}

/// Full multiplication table of the selected basis, entries expressed in
/// that basis.
pub struct ProductTable {
    /// Selected basis label pairs, in selection order.
    pub basis: Vec<(String, String)>,
    /// `entries[i][j]` = coordinates of `basis[i] * basis[j]`.
    pub entries: Vec<Vec<Vec<Coordinate>>>,
}

pub fn product_table(
    action: &PartialActionData,
    extraction: &BasisExtraction,
) -> Result<ProductTable, SpanError> {
    let selected: Vec<&SmashElement> = extraction
        .selected()
        .iter()
        .map(|&i| extraction.generator(i))
        .collect();
    let mut entries = Vec::with_capacity(selected.len());
    for x in &selected {
        let mut row = Vec::with_capacity(selected.len());
        for y in &selected {
            let product = smash_mul(action, x, y);
            row.push(extraction.express(&product)?);
        }
        entries.push(row);
    }
    Ok(ProductTable {
        basis: extraction.selected_labels(),
        entries,
    })
}
