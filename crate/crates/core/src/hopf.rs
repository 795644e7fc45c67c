//! Coalgebra and Hopf structure on top of a [`StructureAlgebra`]:
//! comultiplication, counit, antipode, iterated coproducts in fully expanded
//! Sweedler form, and the corresponding axiom checks.
//!
//! The comultiplication, counit and antipode are stored on every basis
//! element, not just on generators; [`HopfData::check_bialgebra_compat`]
//! guards their consistency with the multiplicative structure.

use crate::algebra::{AlgebraElement, AlgebraError, StructureAlgebra, TensorElement};
use crate::report::{CheckEntry, VerificationReport};
use crate::symbolic::{scaled_text, Polynomial};
use num_traits::Signed;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// One fully expanded term of an n-fold coproduct: a coefficient times a
/// pure tensor of basis elements. `legs` holds basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweedlerTerm {
    pub legs: Vec<usize>,
    pub coeff: Polynomial,
}

impl SweedlerTerm {
    pub fn leg_labels(&self, algebra: &StructureAlgebra) -> Vec<String> {
        self.legs
            .iter()
            .map(|&i| algebra.label(i).to_string())
            .collect()
    }
}

pub(crate) fn render_sweedler_terms(
    algebra: &StructureAlgebra,
    terms: &[SweedlerTerm],
) -> String {
    let mut out = String::new();
    let mut first = true;
    for t in terms {
        if t.coeff.is_zero() {
            continue;
        }
        let label = t.leg_labels(algebra).join("(x)");
        let (negative, body) = match t.coeff.single_term() {
            Some((m, c)) => (c.is_negative(), scaled_text(&c.abs(), m, Some(&label))),
            None => (false, format!("({})*{}", t.coeff, label)),
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

/// Hopf-algebra data over a structure algebra: per-basis comultiplication
/// (as coefficiented basis-pair tensors), counit scalars and antipode
/// elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfData {
    algebra: Arc<StructureAlgebra>,
    delta: Vec<Vec<(usize, usize, Polynomial)>>,
    counit: Vec<Polynomial>,
    antipode: Vec<AlgebraElement>,
}

impl HopfData {
    pub fn new(
        algebra: Arc<StructureAlgebra>,
        delta: Vec<Vec<(usize, usize, Polynomial)>>,
        counit: Vec<Polynomial>,
        antipode: Vec<AlgebraElement>,
    ) -> Result<Self, AlgebraError> {
        let dim = algebra.dim();
        let invalid = |message: &str| AlgebraError::InvalidData {
            algebra: algebra.name().to_string(),
            message: message.to_string(),
        };
        if delta.len() != dim || counit.len() != dim || antipode.len() != dim {
            return Err(invalid(
                "comultiplication, counit and antipode must cover the whole basis",
            ));
        }
        if delta
            .iter()
            .flatten()
            .any(|&(l, r, _)| l >= dim || r >= dim)
        {
            return Err(invalid("comultiplication references an invalid basis index"));
        }
        // Canonicalize each coproduct: merge duplicate leg pairs, drop zeros.
        let delta = delta
            .into_iter()
            .map(|terms| {
                let mut merged: BTreeMap<(usize, usize), Polynomial> = BTreeMap::new();
                for (l, r, c) in terms {
                    let slot = merged.entry((l, r)).or_default();
                    *slot = &*slot + &c;
                }
                merged
                    .into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|((l, r), c)| (l, r, c))
                    .collect()
            })
            .collect();
        Ok(HopfData {
            algebra,
            delta,
            counit,
            antipode,
        })
    }

    pub fn algebra(&self) -> &Arc<StructureAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn delta(&self, i: usize) -> &[(usize, usize, Polynomial)] {
        &self.delta[i]
    }

    pub fn counit(&self, i: usize) -> &Polynomial {
        &self.counit[i]
    }

    pub fn antipode(&self, i: usize) -> &AlgebraElement {
        &self.antipode[i]
    }

    /// The n-fold coproduct of a basis element, fully expanded into basis
    /// legs. `n = 1` returns the element itself; `n = 2` is the stored
    /// comultiplication; higher `n` iterates it on the leftmost leg.
    /// Coassociativity (checked, not assumed) makes the leg choice
    /// immaterial.
    pub fn coproduct_n(&self, b: usize, n: usize) -> Vec<SweedlerTerm> {
        assert!(n >= 1, "coproduct arity must be at least 1");
        self.expand(b, n, true)
    }

    pub fn coproduct_by_label(
        &self,
        label: &str,
        n: usize,
    ) -> Result<Vec<SweedlerTerm>, AlgebraError> {
        let i = self
            .algebra
            .index_of(label)
            .ok_or_else(|| AlgebraError::UnknownLabel(label.to_string()))?;
        Ok(self.coproduct_n(i, n))
    }

    /// Same expansion applied to the rightmost leg; used to confirm that the
    /// bracketing does not matter.
    #[cfg(test)]
    pub(crate) fn coproduct_n_right(&self, b: usize, n: usize) -> Vec<SweedlerTerm> {
        assert!(n >= 1);
        self.expand(b, n, false)
    }

    fn expand(&self, b: usize, n: usize, leftmost: bool) -> Vec<SweedlerTerm> {
        let mut terms: BTreeMap<Vec<usize>, Polynomial> = BTreeMap::new();
        terms.insert(vec![b], Polynomial::one());
        for _ in 1..n {
            let mut next: BTreeMap<Vec<usize>, Polynomial> = BTreeMap::new();
            for (legs, coeff) in &terms {
                let split = if leftmost { 0 } else { legs.len() - 1 };
                for (l, r, c) in &self.delta[legs[split]] {
                    let mut new_legs = Vec::with_capacity(legs.len() + 1);
                    new_legs.extend_from_slice(&legs[..split]);
                    new_legs.push(*l);
                    new_legs.push(*r);
                    new_legs.extend_from_slice(&legs[split + 1..]);
                    let slot = next.entry(new_legs).or_default();
                    *slot = &*slot + &(coeff * c);
                }
            }
            terms = next;
        }
        terms
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(legs, coeff)| SweedlerTerm { legs, coeff })
            .collect()
    }

    /// Coassociativity and the two counit laws on every basis element.
    pub fn check_coalgebra(&self) -> VerificationReport {
        let dim = self.dim();
        let mut entries = Vec::new();
        for b in 0..dim {
            let left = self.expand(b, 3, true);
            let right = self.expand(b, 3, false);
            entries.push(CheckEntry {
                tuple: vec!["coassoc".to_string(), self.algebra.label(b).to_string()],
                passed: left == right,
                lhs: render_sweedler_terms(&self.algebra, &left),
                rhs: render_sweedler_terms(&self.algebra, &right),
            });
        }
        for (side, keep_right) in [("counit_left", true), ("counit_right", false)] {
            for b in 0..dim {
                let mut got = AlgebraElement::zero(&self.algebra);
                for (l, r, c) in &self.delta[b] {
                    let (contracted, kept) = if keep_right { (l, r) } else { (r, l) };
                    let scalar = c * &self.counit[*contracted];
                    got = got.add(&AlgebraElement::basis(&self.algebra, *kept).scale(&scalar));
                }
                let expected = AlgebraElement::basis(&self.algebra, b);
                entries.push(CheckEntry {
                    tuple: vec![side.to_string(), self.algebra.label(b).to_string()],
                    passed: got == expected,
                    lhs: got.to_string(),
                    rhs: expected.to_string(),
                });
            }
        }
        VerificationReport::new("coalgebra", entries)
    }

    /// `mu (S (x) id) Delta(b) = counit(b) 1 = mu (id (x) S) Delta(b)`.
    pub fn check_antipode(&self) -> VerificationReport {
        let dim = self.dim();
        let mut entries = Vec::new();
        for (side, antipode_left) in [("S*id", true), ("id*S", false)] {
            for b in 0..dim {
                let mut got = AlgebraElement::zero(&self.algebra);
                for (l, r, c) in &self.delta[b] {
                    let product = if antipode_left {
                        self.antipode[*l].mul(&AlgebraElement::basis(&self.algebra, *r))
                    } else {
                        AlgebraElement::basis(&self.algebra, *l).mul(&self.antipode[*r])
                    };
                    got = got.add(&product.scale(c));
                }
                let expected = AlgebraElement::unit(&self.algebra).scale(&self.counit[b]);
                entries.push(CheckEntry {
                    tuple: vec![side.to_string(), self.algebra.label(b).to_string()],
                    passed: got == expected,
                    lhs: got.to_string(),
                    rhs: expected.to_string(),
                });
            }
        }
        VerificationReport::new("antipode", entries)
    }

    /// `Delta(bi bj) = Delta(bi) Delta(bj)` and `eps(bi bj) = eps(bi) eps(bj)`
    /// for every basis pair, expanding the left sides linearly through the
    /// stored tables.
    pub fn check_bialgebra_compat(&self) -> VerificationReport {
        let dim = self.dim();
        let mut entries = Vec::new();
        for bi in 0..dim {
            for bj in 0..dim {
                let product = self.algebra.product_coords(bi, bj);

                let mut lhs = TensorElement::zero(&self.algebra, &self.algebra);
                for (k, coeff) in product.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    for (l, r, c) in &self.delta[k] {
                        lhs.add_term(*l, *r, coeff * c);
                    }
                }

                let mut rhs = TensorElement::zero(&self.algebra, &self.algebra);
                for (l1, r1, c1) in &self.delta[bi] {
                    for (l2, r2, c2) in &self.delta[bj] {
                        let scalar = c1 * c2;
                        let left = self.algebra.product_coords(*l1, *l2);
                        let right = self.algebra.product_coords(*r1, *r2);
                        for (a, pa) in left.iter().enumerate() {
                            if pa.is_zero() {
                                continue;
                            }
                            for (b, pb) in right.iter().enumerate() {
                                if pb.is_zero() {
                                    continue;
                                }
                                rhs.add_term(a, b, &(&scalar * pa) * pb);
                            }
                        }
                    }
                }

                entries.push(CheckEntry {
                    tuple: vec![
                        "delta".to_string(),
                        self.algebra.label(bi).to_string(),
                        self.algebra.label(bj).to_string(),
                    ],
                    passed: lhs == rhs,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
        for bi in 0..dim {
            for bj in 0..dim {
                let product = self.algebra.product_coords(bi, bj);
                let lhs = product
                    .iter()
                    .enumerate()
                    .fold(Polynomial::zero(), |acc, (k, coeff)| {
                        &acc + &(coeff * &self.counit[k])
                    });
                let rhs = &self.counit[bi] * &self.counit[bj];
                entries.push(CheckEntry {
                    tuple: vec![
                        "counit".to_string(),
                        self.algebra.label(bi).to_string(),
                        self.algebra.label(bj).to_string(),
                    ],
                    passed: lhs == rhs,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
        VerificationReport::new("bialgebra", entries)
    }
}

impl fmt::Display for HopfData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "hopf algebra `{}`", self.algebra.name())
    }
}

#[cfg(test)]
mod tests;
