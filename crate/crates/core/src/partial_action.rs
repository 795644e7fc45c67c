//! Twisted-partial-action data and its axiom verifiers.
//!
//! The data is a Hopf algebra `H`, a unital target algebra `A`, an action
//! table `H-basis x A-basis -> A` and a cocycle table
//! `H-basis x H-basis -> A`. Both maps extend bilinearly. The verifiers
//! check, tuple by basis tuple, the six identities
//!
//! ```text
//! E1:  1_H . a = a
//! E2:  h . (a b) = (h1 . a)(h2 . b)
//! E3:  (h1 . (l1 . a)) w(h2, l2) = w(h1, l1) (h2 l2 . a)
//! E4:  w(h, l) = w(h1, l1) (h2 l2 . 1_A)
//! E5:  w(h, 1_H) = w(1_H, h) = h . 1_A
//! E6:  (h1 . w(m1, t1)) w(h2, m2 t2) = w(h1, m1) w(h2 m2, t)
//! ```
//!
//! where subscripts are fully expanded Sweedler legs. Bilinearity makes the
//! basis-tuple checks equivalent to the universally quantified statements.
//! E1 through E4 make the pair a twisted partial action; E5 and E6 are the
//! extra conditions under which the partial crossed product is associative
//! and unital.

use crate::algebra::{AlgebraElement, AlgebraError, StructureAlgebra, TensorElement};
use crate::hopf::HopfData;
use crate::report::{CheckEntry, CheckOutcome, VerificationReport, VerificationRun};
use crate::symbolic::{Parameter, Rational};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Which group of axioms gates a verification run.
///
/// Both profiles evaluate and report all six checks; the profile only
/// decides whether E5/E6 failures are fatal or informational.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    /// Require E1 through E4 (twisted partial action).
    Core,
    /// Additionally require E5 and E6 (associative unital crossed product).
    Crossed,
}

/// A parametrized twisted-partial-action candidate: the tables are data;
/// whether they satisfy the axioms is what the checks decide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialActionData {
    name: String,
    hopf: HopfData,
    target: Arc<StructureAlgebra>,
    /// `action[h][a]` = element of the target algebra.
    action: Vec<Vec<AlgebraElement>>,
    /// `cocycle[h][l]` = element of the target algebra.
    cocycle: Vec<Vec<AlgebraElement>>,
    parameters: Vec<Parameter>,
}

impl PartialActionData {
    pub fn new(
        name: impl Into<String>,
        hopf: HopfData,
        target: Arc<StructureAlgebra>,
        action: Vec<Vec<AlgebraElement>>,
        cocycle: Vec<Vec<AlgebraElement>>,
        parameters: Vec<Parameter>,
    ) -> Result<Self, AlgebraError> {
        let name = name.into();
        let dim_h = hopf.dim();
        let dim_a = target.dim();
        let shape_ok = |t: &Vec<Vec<AlgebraElement>>, cols: usize| {
            t.len() == dim_h && t.iter().all(|row| row.len() == cols)
        };
        if !shape_ok(&action, dim_a) || !shape_ok(&cocycle, dim_h) {
            return Err(AlgebraError::InvalidData {
                algebra: name,
                message: "action/cocycle tables must cover the whole basis".into(),
            });
        }
        for e in action.iter().flatten().chain(cocycle.iter().flatten()) {
            if e.algebra() != &target {
                return Err(AlgebraError::InvalidData {
                    algebra: name,
                    message: "table entries must live in the target algebra".into(),
                });
            }
        }
        Ok(PartialActionData {
            name,
            hopf,
            target,
            action,
            cocycle,
            parameters,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn hopf(&self) -> &HopfData {
        &self.hopf
    }

    pub fn hopf_algebra(&self) -> &Arc<StructureAlgebra> {
        self.hopf.algebra()
    }

    pub fn target(&self) -> &Arc<StructureAlgebra> {
        &self.target
    }

    pub fn parameters(&self) -> &[Parameter] {
        &self.parameters
    }

    /// Table lookup: `basis[h] . basis[a]`.
    pub fn action_basis(&self, h: usize, a: usize) -> &AlgebraElement {
        &self.action[h][a]
    }

    /// Table lookup: `w(basis[h], basis[l])`.
    pub fn cocycle_basis(&self, h: usize, l: usize) -> &AlgebraElement {
        &self.cocycle[h][l]
    }

    pub fn action_by_labels(&self, h: &str, a: &str) -> Result<&AlgebraElement, AlgebraError> {
        let hi = self.h_index(h)?;
        let ai = self
            .target
            .index_of(a)
            .ok_or_else(|| AlgebraError::UnknownLabel(a.to_string()))?;
        Ok(self.action_basis(hi, ai))
    }

    pub fn cocycle_by_labels(&self, h: &str, l: &str) -> Result<&AlgebraElement, AlgebraError> {
        Ok(self.cocycle_basis(self.h_index(h)?, self.h_index(l)?))
    }

    fn h_index(&self, label: &str) -> Result<usize, AlgebraError> {
        self.hopf_algebra()
            .index_of(label)
            .ok_or_else(|| AlgebraError::UnknownLabel(label.to_string()))
    }

    /// Bilinear extension of the action to arbitrary elements.
    pub fn act(
        &self,
        h: &AlgebraElement,
        a: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        if h.algebra() != self.hopf_algebra() {
            return Err(AlgebraError::Mismatch {
                left: h.algebra().name().to_string(),
                right: self.hopf_algebra().name().to_string(),
            });
        }
        if a.algebra() != &self.target {
            return Err(AlgebraError::Mismatch {
                left: a.algebra().name().to_string(),
                right: self.target.name().to_string(),
            });
        }
        Ok(self.act_unchecked(h, a))
    }

    fn act_unchecked(&self, h: &AlgebraElement, a: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(&self.target);
        for (hi, hc) in h.coords().iter().enumerate() {
            if hc.is_zero() {
                continue;
            }
            for (ai, ac) in a.coords().iter().enumerate() {
                if ac.is_zero() {
                    continue;
                }
                out = out.add(&self.action[hi][ai].scale(&(hc * ac)));
            }
        }
        out
    }

    /// Bilinear extension of the cocycle to arbitrary elements of `H`.
    pub fn cocycle(
        &self,
        h: &AlgebraElement,
        l: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        for x in [h, l] {
            if x.algebra() != self.hopf_algebra() {
                return Err(AlgebraError::Mismatch {
                    left: x.algebra().name().to_string(),
                    right: self.hopf_algebra().name().to_string(),
                });
            }
        }
        Ok(self.cocycle_unchecked(h, l))
    }

    fn cocycle_unchecked(&self, h: &AlgebraElement, l: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(&self.target);
        for (hi, hc) in h.coords().iter().enumerate() {
            if hc.is_zero() {
                continue;
            }
            for (li, lc) in l.coords().iter().enumerate() {
                if lc.is_zero() {
                    continue;
                }
                out = out.add(&self.cocycle[hi][li].scale(&(hc * lc)));
            }
        }
        out
    }

    fn h_elem(&self, i: usize) -> AlgebraElement {
        AlgebraElement::basis(self.hopf_algebra(), i)
    }

    fn a_elem(&self, i: usize) -> AlgebraElement {
        AlgebraElement::basis(&self.target, i)
    }

    fn h_mul(&self, i: usize, j: usize) -> AlgebraElement {
        AlgebraElement::new(
            self.hopf_algebra(),
            self.hopf_algebra().product_coords(i, j).to_vec(),
        )
    }

    fn entry(&self, tuple: Vec<String>, lhs: AlgebraElement, rhs: AlgebraElement) -> CheckEntry {
        CheckEntry {
            passed: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            tuple,
        }
    }

    /// E1: the unit of `H` acts as the identity.
    pub fn check_e1(&self) -> VerificationReport {
        let unit_h = AlgebraElement::unit(self.hopf_algebra());
        let entries = (0..self.target.dim())
            .map(|a| {
                let lhs = self.act_unchecked(&unit_h, &self.a_elem(a));
                let rhs = self.a_elem(a);
                self.entry(vec![self.target.label(a).to_string()], lhs, rhs)
            })
            .collect();
        VerificationReport::new("E1", entries)
    }

    /// E2: `h . (a b) = (h1 . a)(h2 . b)` over all basis triples.
    pub fn check_e2(&self) -> VerificationReport {
        let dim_h = self.hopf.dim();
        let dim_a = self.target.dim();
        let mut tuples = Vec::new();
        for h in 0..dim_h {
            for a in 0..dim_a {
                for b in 0..dim_a {
                    tuples.push((h, a, b));
                }
            }
        }
        let entries: Vec<CheckEntry> = tuples
            .par_iter()
            .map(|&(h, a, b)| {
                let ab =
                    AlgebraElement::new(&self.target, self.target.product_coords(a, b).to_vec());
                let lhs = self.act_unchecked(&self.h_elem(h), &ab);
                let mut rhs = AlgebraElement::zero(&self.target);
                for t in self.hopf.coproduct_n(h, 2) {
                    let left = self.action_basis(t.legs[0], a);
                    let right = self.action_basis(t.legs[1], b);
                    rhs = rhs.add(&left.mul(right).scale(&t.coeff));
                }
                self.entry(
                    vec![
                        self.hopf_algebra().label(h).to_string(),
                        self.target.label(a).to_string(),
                        self.target.label(b).to_string(),
                    ],
                    lhs,
                    rhs,
                )
            })
            .collect();
        VerificationReport::new("E2", entries)
    }

    /// E3: `(h1 . (l1 . a)) w(h2, l2) = w(h1, l1) (h2 l2 . a)`.
    pub fn check_e3(&self) -> VerificationReport {
        let dim_h = self.hopf.dim();
        let dim_a = self.target.dim();
        let mut tuples = Vec::new();
        for h in 0..dim_h {
            for l in 0..dim_h {
                for a in 0..dim_a {
                    tuples.push((h, l, a));
                }
            }
        }
        let entries: Vec<CheckEntry> = tuples
            .par_iter()
            .map(|&(h, l, a)| {
                let mut lhs = AlgebraElement::zero(&self.target);
                let mut rhs = AlgebraElement::zero(&self.target);
                for s in self.hopf.coproduct_n(h, 2) {
                    for t in self.hopf.coproduct_n(l, 2) {
                        let c = &s.coeff * &t.coeff;
                        let inner = self.action_basis(t.legs[0], a);
                        let acted = self.act_unchecked(&self.h_elem(s.legs[0]), inner);
                        lhs =
                            lhs.add(&acted.mul(self.cocycle_basis(s.legs[1], t.legs[1])).scale(&c));
                        let product = self.h_mul(s.legs[1], t.legs[1]);
                        let moved = self.act_unchecked(&product, &self.a_elem(a));
                        rhs =
                            rhs.add(&self.cocycle_basis(s.legs[0], t.legs[0]).mul(&moved).scale(&c));
                    }
                }
                self.entry(
                    vec![
                        self.hopf_algebra().label(h).to_string(),
                        self.hopf_algebra().label(l).to_string(),
                        self.target.label(a).to_string(),
                    ],
                    lhs,
                    rhs,
                )
            })
            .collect();
        VerificationReport::new("E3", entries)
    }

    /// E4: `w(h, l) = w(h1, l1) (h2 l2 . 1_A)`.
    pub fn check_e4(&self) -> VerificationReport {
        let dim_h = self.hopf.dim();
        let unit_a = AlgebraElement::unit(&self.target);
        let mut entries = Vec::new();
        for h in 0..dim_h {
            for l in 0..dim_h {
                let lhs = self.cocycle_basis(h, l).clone();
                let mut rhs = AlgebraElement::zero(&self.target);
                for s in self.hopf.coproduct_n(h, 2) {
                    for t in self.hopf.coproduct_n(l, 2) {
                        let c = &s.coeff * &t.coeff;
                        let product = self.h_mul(s.legs[1], t.legs[1]);
                        let acted = self.act_unchecked(&product, &unit_a);
                        rhs =
                            rhs.add(&self.cocycle_basis(s.legs[0], t.legs[0]).mul(&acted).scale(&c));
                    }
                }
                entries.push(self.entry(
                    vec![
                        self.hopf_algebra().label(h).to_string(),
                        self.hopf_algebra().label(l).to_string(),
                    ],
                    lhs,
                    rhs,
                ));
            }
        }
        VerificationReport::new("E4", entries)
    }

    /// E5: `w(h, 1_H) = w(1_H, h) = h . 1_A`, one entry per basis element
    /// covering both equalities.
    pub fn check_e5(&self) -> VerificationReport {
        let unit_h = AlgebraElement::unit(self.hopf_algebra());
        let unit_a = AlgebraElement::unit(&self.target);
        let mut entries = Vec::new();
        for h in 0..self.hopf.dim() {
            let right_unit = self.cocycle_unchecked(&self.h_elem(h), &unit_h);
            let left_unit = self.cocycle_unchecked(&unit_h, &self.h_elem(h));
            let acted = self.act_unchecked(&self.h_elem(h), &unit_a);
            entries.push(CheckEntry {
                tuple: vec![self.hopf_algebra().label(h).to_string()],
                passed: right_unit == acted && left_unit == acted,
                lhs: format!("w(h,1) = {right_unit} ; w(1,h) = {left_unit}"),
                rhs: format!("h.1 = {acted}"),
            });
        }
        VerificationReport::new("E5", entries)
    }

    /// E6: `(h1 . w(m1, t1)) w(h2, m2 t2) = w(h1, m1) w(h2 m2, t)`.
    pub fn check_e6(&self) -> VerificationReport {
        let dim_h = self.hopf.dim();
        let mut tuples = Vec::new();
        for h in 0..dim_h {
            for m in 0..dim_h {
                for t in 0..dim_h {
                    tuples.push((h, m, t));
                }
            }
        }
        let entries: Vec<CheckEntry> = tuples
            .par_iter()
            .map(|&(h, m, t)| {
                let mut lhs = AlgebraElement::zero(&self.target);
                for s in self.hopf.coproduct_n(h, 2) {
                    for u in self.hopf.coproduct_n(m, 2) {
                        for v in self.hopf.coproduct_n(t, 2) {
                            let c = &(&s.coeff * &u.coeff) * &v.coeff;
                            let acted = self.act_unchecked(
                                &self.h_elem(s.legs[0]),
                                self.cocycle_basis(u.legs[0], v.legs[0]),
                            );
                            let tail = self.cocycle_unchecked(
                                &self.h_elem(s.legs[1]),
                                &self.h_mul(u.legs[1], v.legs[1]),
                            );
                            lhs = lhs.add(&acted.mul(&tail).scale(&c));
                        }
                    }
                }
                let mut rhs = AlgebraElement::zero(&self.target);
                for s in self.hopf.coproduct_n(h, 2) {
                    for u in self.hopf.coproduct_n(m, 2) {
                        let c = &s.coeff * &u.coeff;
                        let head = self.cocycle_basis(s.legs[0], u.legs[0]);
                        let tail = self.cocycle_unchecked(
                            &self.h_mul(s.legs[1], u.legs[1]),
                            &self.h_elem(t),
                        );
                        rhs = rhs.add(&head.mul(&tail).scale(&c));
                    }
                }
                self.entry(
                    vec![
                        self.hopf_algebra().label(h).to_string(),
                        self.hopf_algebra().label(m).to_string(),
                        self.hopf_algebra().label(t).to_string(),
                    ],
                    lhs,
                    rhs,
                )
            })
            .collect();
        VerificationReport::new("E6", entries)
    }

    /// Runs all six checks. Under [`Profile::Core`] the E5/E6 reports are
    /// informational; under [`Profile::Crossed`] they are required.
    pub fn verify_all(&self, profile: Profile) -> VerificationRun {
        let crossed = profile == Profile::Crossed;
        let mut run = VerificationRun::default();
        run.push(CheckOutcome::required(self.check_e1()));
        run.push(CheckOutcome::required(self.check_e2()));
        run.push(CheckOutcome::required(self.check_e3()));
        run.push(CheckOutcome::required(self.check_e4()));
        for report in [self.check_e5(), self.check_e6()] {
            run.push(if crossed {
                CheckOutcome::required(report)
            } else {
                CheckOutcome::informational(report)
            });
        }
        run
    }

    /// Specializes every action and cocycle table entry at a (possibly
    /// partial) parameter assignment. Structure constants of the underlying
    /// algebras are left untouched.
    pub fn substitute(&self, assignment: &BTreeMap<Parameter, Rational>) -> PartialActionData {
        let map_table = |t: &Vec<Vec<AlgebraElement>>| {
            t.iter()
                .map(|row| row.iter().map(|e| e.substitute(assignment)).collect())
                .collect()
        };
        PartialActionData {
            name: self.name.clone(),
            hopf: self.hopf.clone(),
            target: Arc::clone(&self.target),
            action: map_table(&self.action),
            cocycle: map_table(&self.cocycle),
            parameters: self
                .parameters
                .iter()
                .filter(|p| !assignment.contains_key(p))
                .cloned()
                .collect(),
        }
    }

    /// A copy with one table entry replaced, for mutation testing. Panics on
    /// out-of-range indices.
    pub fn with_table_entry(
        &self,
        table: MutationTable,
        row: usize,
        col: usize,
        value: AlgebraElement,
    ) -> PartialActionData {
        let mut out = self.clone();
        match table {
            MutationTable::Action => out.action[row][col] = value,
            MutationTable::Cocycle => out.cocycle[row][col] = value,
        }
        out
    }

    /// Sharp generator: `a # h = a (h1 . 1_A) (x) h2` as a tensor element.
    pub(crate) fn sharp_tensor(&self, a: usize, h: usize) -> TensorElement {
        let unit_a = AlgebraElement::unit(&self.target);
        let a_elem = self.a_elem(a);
        let mut out = TensorElement::zero(&self.target, self.hopf_algebra());
        for t in self.hopf.coproduct_n(h, 2) {
            let acted = self.act_unchecked(&self.h_elem(t.legs[0]), &unit_a);
            let left = a_elem.mul(&acted);
            out.add_scaled_outer(&left, &self.h_elem(t.legs[1]), &t.coeff);
        }
        out
    }

    /// The tensor-space product
    /// `(a (x) h)(b (x) l) = a (h1 . b) w(h2, l1) (x) h3 l2`, extended
    /// bilinearly from basis tensors.
    pub(crate) fn tensor_mul(&self, x: &TensorElement, y: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(&self.target, self.hopf_algebra());
        for ((a, h), xc) in x.terms() {
            let a_elem = self.a_elem(a);
            let h_split = self.hopf.coproduct_n(h, 3);
            for ((b, l), yc) in y.terms() {
                let scale = xc * yc;
                for s in &h_split {
                    for t in self.hopf.coproduct_n(l, 2) {
                        let c = &(&s.coeff * &t.coeff) * &scale;
                        if c.is_zero() {
                            continue;
                        }
                        let acted = self.act_unchecked(&self.h_elem(s.legs[0]), &self.a_elem(b));
                        let left = a_elem
                            .mul(&acted)
                            .mul(self.cocycle_basis(s.legs[1], t.legs[0]));
                        if left.is_zero() {
                            continue;
                        }
                        let right = self.h_mul(s.legs[2], t.legs[1]);
                        out.add_scaled_outer(&left, &right, &c);
                    }
                }
            }
        }
        out
    }
}

/// Which table a mutation perturbs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MutationTable {
    Action,
    Cocycle,
}

#[cfg(test)]
mod tests;
