//! Canonical printer for definition documents: `parse(print(doc))` yields a
//! document equal to `doc`.

use super::DefinitionDocument;
use crate::algebra::{AlgebraElement, StructureAlgebra};
use crate::hopf::HopfData;
use crate::partial_action::PartialActionData;
use crate::symbolic::{scaled_text, Polynomial};
use num_traits::Signed;
use std::fmt::Write;

pub fn print_document(doc: &DefinitionDocument) -> String {
    let mut out = String::new();
    if let Some(name) = &doc.name {
        let _ = writeln!(out, "name {name}");
    }
    if let Some(note) = &doc.note {
        let _ = writeln!(out, "note \"{note}\"");
    }
    if !doc.parameters.is_empty() {
        let _ = writeln!(out, "params {}", doc.parameters.join(" "));
    }
    for algebra in &doc.algebras {
        out.push('\n');
        print_algebra_block(&mut out, "algebra", algebra, |_| {});
    }
    for hopf in &doc.hopfs {
        out.push('\n');
        print_algebra_block(&mut out, "hopf", hopf.algebra(), |out| {
            print_hopf_tail(out, hopf);
        });
    }
    for action in &doc.actions {
        out.push('\n');
        print_action_block(&mut out, action);
    }
    out
}

fn element_text(e: &AlgebraElement) -> String {
    e.to_string()
}

fn print_algebra_block(
    out: &mut String,
    kind: &str,
    algebra: &StructureAlgebra,
    tail: impl FnOnce(&mut String),
) {
    let _ = writeln!(out, "{kind} {} {{", algebra.name());
    let _ = writeln!(out, "  basis {}", algebra.basis_labels().join(" "));
    let unit = AlgebraElement::new(
        &std::sync::Arc::new(algebra.clone()),
        algebra.unit_coords().to_vec(),
    );
    let _ = writeln!(out, "  unit {}", element_text(&unit));
    for i in 0..algebra.dim() {
        for j in 0..algebra.dim() {
            let coords = algebra.product_coords(i, j);
            if coords.iter().all(Polynomial::is_zero) {
                continue;
            }
            let value = AlgebraElement::new(&std::sync::Arc::new(algebra.clone()), coords.to_vec());
            let _ = writeln!(
                out,
                "  mul {} {} = {}",
                algebra.label(i),
                algebra.label(j),
                element_text(&value)
            );
        }
    }
    tail(out);
    out.push_str("}\n");
}

fn pair_terms_text(
    algebra: &StructureAlgebra,
    terms: &[(usize, usize, Polynomial)],
) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (l, r, c) in terms {
        let label = format!("{}:{}", algebra.label(*l), algebra.label(*r));
        let (negative, body) = match c.single_term() {
            Some((m, coeff)) => (
                coeff.is_negative(),
                scaled_text(&coeff.abs(), m, Some(&label)),
            ),
            None => (false, format!("({c})*{label}")),
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
    out
}

fn print_hopf_tail(out: &mut String, hopf: &HopfData) {
    let algebra = hopf.algebra();
    for i in 0..hopf.dim() {
        let _ = writeln!(
            out,
            "  delta {} = {}",
            algebra.label(i),
            pair_terms_text(algebra, hopf.delta(i))
        );
    }
    for i in 0..hopf.dim() {
        let _ = writeln!(out, "  counit {} = {}", algebra.label(i), hopf.counit(i));
    }
    for i in 0..hopf.dim() {
        let _ = writeln!(
            out,
            "  antipode {} = {}",
            algebra.label(i),
            element_text(hopf.antipode(i))
        );
    }
}

fn print_action_block(out: &mut String, action: &PartialActionData) {
    let _ = writeln!(out, "action {} {{", action.name());
    let _ = writeln!(out, "  hopf {}", action.hopf_algebra().name());
    let _ = writeln!(out, "  target {}", action.target().name());
    let hopf = action.hopf_algebra();
    let target = action.target();
    for h in 0..hopf.dim() {
        for a in 0..target.dim() {
            let value = action.action_basis(h, a);
            if value.is_zero() {
                continue;
            }
            let _ = writeln!(
                out,
                "  act {} {} = {}",
                hopf.label(h),
                target.label(a),
                element_text(value)
            );
        }
    }
    for h in 0..hopf.dim() {
        for l in 0..hopf.dim() {
            let value = action.cocycle_basis(h, l);
            if value.is_zero() {
                continue;
            }
            let _ = writeln!(
                out,
                "  cocycle {} {} = {}",
                hopf.label(h),
                hopf.label(l),
                element_text(value)
            );
        }
    }
    out.push_str("}\n");
}
