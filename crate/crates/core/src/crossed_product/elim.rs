//! Fraction-free Gaussian elimination over the polynomial ring.
//!
//! Rows are offered one at a time; each is reduced against the pivot rows
//! found so far with the one-step fraction-free update
//! `r := (p[c] * r - r[c] * p) / prev`, where `prev` is the previous pivot
//! value (1 at the first stage). The divisions are exact by the Sylvester
//! determinant identity, so all entries stay polynomials; no rational
//! function arithmetic is needed anywhere.

use crate::symbolic::Polynomial;

pub(crate) struct PivotRow {
    pub col: usize,
    pub row: Vec<Polynomial>,
}

pub(crate) struct Eliminator {
    cols: usize,
    pub pivots: Vec<PivotRow>,
}

impl Eliminator {
    pub fn new(cols: usize) -> Self {
        Eliminator {
            cols,
            pivots: Vec::new(),
        }
    }

    #[cfg(test)]
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces a row against all current pivots, fraction-free.
    pub fn reduce(&self, mut row: Vec<Polynomial>) -> Vec<Polynomial> {
        assert_eq!(row.len(), self.cols);
        let mut prev = Polynomial::one();
        for p in &self.pivots {
            let pivot_value = p.row[p.col].clone();
            let coef = row[p.col].clone();
            for (j, entry) in row.iter_mut().enumerate() {
                let numerator = &(&pivot_value * entry) - &(&coef * &p.row[j]);
                *entry = numerator
                    .exact_div(&prev)
                    .expect("fraction-free elimination: inexact division");
            }
            prev = pivot_value;
        }
        row
    }

    /// Offers a row; if it is independent of the pivots found so far it
    /// becomes a new pivot row and its pivot column is returned.
    ///
    /// The pivot column is the first entry holding a nonzero constant, or
    /// failing that the first nonzero entry. Constant pivots keep the
    /// elimination trace free of spurious parameter degeneracies.
    pub fn offer(&mut self, row: Vec<Polynomial>) -> Option<usize> {
        let reduced = self.reduce(row);
        let first_constant = reduced
            .iter()
            .position(|p| !p.is_zero() && p.as_constant().is_some());
        let col = first_constant.or_else(|| reduced.iter().position(|p| !p.is_zero()))?;
        self.pivots.push(PivotRow { col, row: reduced });
        Some(col)
    }
}

/// Determinant of a square polynomial matrix by Bareiss elimination with row
/// pivoting. Exact; returns zero for singular matrices.
pub(crate) fn bareiss_det(mut m: Vec<Vec<Polynomial>>) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..n {
        let pivot_row = match (k..n).find(|&r| !m[r][k].is_zero()) {
            Some(r) => r,
            None => return Polynomial::zero(),
        };
        if pivot_row != k {
            m.swap(pivot_row, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let numerator = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = numerator
                    .exact_div(&prev)
                    .expect("Bareiss determinant: inexact division");
            }
            m[i][k] = Polynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}
