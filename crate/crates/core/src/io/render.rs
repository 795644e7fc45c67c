//! Rendering of verification runs, crossed-product bases and product
//! tables, as human-readable text and as line-delimited structured records.
//!
//! All output is deterministic byte-for-byte for a given input: entry order
//! comes from the checks' tuple order and every polynomial prints in its
//! canonical form.

use super::DefinitionDocument;
use crate::crossed_product::{
    extract_basis, smash_mul, BasisExtraction, Coordinate, SpanError,
};
use crate::partial_action::{PartialActionData, Profile};
use crate::report::{CheckOutcome, VerificationRun};
use crate::symbolic::scaled_text;
use num_traits::Signed;
use serde::Serialize;
use std::fmt::Write;

/// One titled group of check outcomes (one block of a document).
pub struct VerifySection {
    pub title: String,
    pub run: VerificationRun,
}

/// Verifies every block of a document: structural checks for algebras,
/// structural plus coalgebra/bialgebra/antipode checks for Hopf blocks, and
/// the E-axioms for actions.
///
/// The antipode check gates the result only when the document defines no
/// action (the axioms never use it); E5/E6 gate it only under
/// [`Profile::Crossed`].
pub fn document_verification(doc: &DefinitionDocument, profile: Profile) -> Vec<VerifySection> {
    use crate::report::CheckOutcome as O;
    let mut sections = Vec::new();
    let antipode_required = doc.actions.is_empty();
    for algebra in &doc.algebras {
        let mut run = VerificationRun::default();
        run.push(O::required(algebra.check_associative()));
        run.push(O::required(algebra.check_unital()));
        sections.push(VerifySection {
            title: format!("algebra {}", algebra.name()),
            run,
        });
    }
    for hopf in &doc.hopfs {
        let mut run = VerificationRun::default();
        run.push(O::required(hopf.algebra().check_associative()));
        run.push(O::required(hopf.algebra().check_unital()));
        run.push(O::required(hopf.check_coalgebra()));
        run.push(O::required(hopf.check_bialgebra_compat()));
        let antipode = hopf.check_antipode();
        run.push(if antipode_required {
            O::required(antipode)
        } else {
            O::informational(antipode)
        });
        sections.push(VerifySection {
            title: format!("hopf {}", hopf.algebra().name()),
            run,
        });
    }
    for action in &doc.actions {
        sections.push(VerifySection {
            title: format!("action {}", action.name()),
            run: action.verify_all(profile),
        });
    }
    sections
}

pub fn sections_passed(sections: &[VerifySection]) -> bool {
    sections.iter().all(|s| s.run.passed())
}

fn describe(check: &str) -> &'static str {
    match check {
        "associativity" => "(bi bj) bk = bi (bj bk)",
        "unitality" => "1 bi = bi = bi 1",
        "coalgebra" => "coassociativity and counit laws",
        "bialgebra" => "delta and counit are algebra maps",
        "antipode" => "mu(S(x)id)delta = eps 1 = mu(id(x)S)delta",
        "E1" => "1_H . a = a",
        "E2" => "h.(ab) = (h1.a)(h2.b)",
        "E3" => "(h1.(l1.a)) w(h2,l2) = w(h1,l1) (h2l2.a)",
        "E4" => "w(h,l) = w(h1,l1) (h2l2.1)",
        "E5" => "w(h,1) = w(1,h) = h.1",
        "E6" => "(h1.w(m1,t1)) w(h2,m2t2) = w(h1,m1) w(h2m2,t)",
        _ => "",
    }
}

fn outcome_lines(out: &mut String, outcome: &CheckOutcome) {
    let report = &outcome.report;
    let status = if report.passed() { "PASS" } else { "FAIL" };
    let info = if outcome.required {
        ""
    } else {
        " (informational)"
    };
    let desc = describe(&report.check);
    let _ = writeln!(
        out,
        "  [{status}] {} ({}/{}) {desc}{info}",
        report.check,
        report.num_passed(),
        report.entries.len(),
    );
    for entry in report.counterexamples() {
        let _ = writeln!(out, "    counterexample ({})", entry.tuple.join(", "));
        let _ = writeln!(out, "      lhs = {}", entry.lhs);
        let _ = writeln!(out, "      rhs = {}", entry.rhs);
    }
}

pub fn render_verify_text(header: &str, sections: &[VerifySection]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{header}");
    for section in sections {
        let _ = writeln!(out, "{}:", section.title);
        for outcome in &section.run.outcomes {
            outcome_lines(&mut out, outcome);
        }
    }
    let verdict = if sections_passed(sections) {
        "PASS"
    } else {
        "FAIL"
    };
    let _ = writeln!(out, "result: {verdict}");
    out
}

#[derive(Serialize)]
struct EntryRecord<'a> {
    check: &'a str,
    tuple: &'a [String],
    lhs: &'a str,
    rhs: &'a str,
    pass: bool,
    required: bool,
}

/// One JSON record per verification entry, newline-delimited.
pub fn render_verify_records(sections: &[VerifySection]) -> String {
    let mut out = String::new();
    for section in sections {
        for outcome in &section.run.outcomes {
            for entry in &outcome.report.entries {
                let record = EntryRecord {
                    check: &outcome.report.check,
                    tuple: &entry.tuple,
                    lhs: &entry.lhs,
                    rhs: &entry.rhs,
                    pass: entry.passed,
                    required: outcome.required,
                };
                let _ = writeln!(out, "{}", serde_json::to_string(&record).unwrap());
            }
        }
    }
    out
}

fn pair_text(pair: &(String, String)) -> String {
    format!("{}#{}", pair.0, pair.1)
}

/// Coordinates over the selected basis as a signed sum of `coeff*a#h` terms.
fn coords_text(labels: &[(String, String)], coords: &[Coordinate]) -> String {
    let mut out = String::new();
    let mut first = true;
    for (pair, coord) in labels.iter().zip(coords) {
        if coord.is_zero() {
            continue;
        }
        let label = pair_text(pair);
        let (negative, body) = match coord.as_polynomial() {
            Some(p) => match p.single_term() {
                Some((m, c)) => (c.is_negative(), scaled_text(&c.abs(), m, Some(&label))),
                None => (false, format!("({p})*{label}")),
            },
            None => (false, format!("({coord})*{label}")),
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

pub fn render_basis_text(action: &PartialActionData, extraction: &BasisExtraction) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "crossed product of action '{}'", action.name());
    let _ = writeln!(out, "hopf: {}", action.hopf_algebra().name());
    let _ = writeln!(out, "target: {}", action.target().name());
    let _ = writeln!(out, "generators (a#h = a(h1.1)(x)h2):");
    for (i, pair) in extraction.generator_labels().iter().enumerate() {
        let _ = writeln!(out, "  {} = {}", pair_text(pair), extraction.generator(i));
    }
    let _ = writeln!(out, "rank: {}", extraction.rank());
    let _ = writeln!(out, "selected basis:");
    for pair in extraction.selected_labels() {
        let _ = writeln!(out, "  {}", pair_text(&pair));
    }
    let _ = writeln!(out, "elimination pivots (generator -> tensor coordinate):");
    let dim_h = action.hopf_algebra().dim();
    for &(gen, col) in extraction.pivots() {
        let pair = &extraction.generator_labels()[gen];
        let a = action.target().label(col / dim_h);
        let h = action.hopf_algebra().label(col % dim_h);
        let _ = writeln!(out, "  {} -> {}(x){}", pair_text(pair), a, h);
    }
    out
}

#[derive(Serialize)]
struct GeneratorRecord<'a> {
    pair: String,
    tensor: String,
    selected: bool,
    rank: &'a usize,
}

pub fn render_basis_records(extraction: &BasisExtraction) -> String {
    let rank = extraction.rank();
    let mut out = String::new();
    for (i, pair) in extraction.generator_labels().iter().enumerate() {
        let record = GeneratorRecord {
            pair: pair_text(pair),
            tensor: extraction.generator(i).to_string(),
            selected: extraction.selected().contains(&i),
            rank: &rank,
        };
        let _ = writeln!(out, "{}", serde_json::to_string(&record).unwrap());
    }
    out
}

/// The full product table emission: every generator pair's product,
/// expressed in the selected basis. The unit and associativity lines are
/// computed facts about the emitted data, not assumptions.
pub fn render_table_text(
    action: &PartialActionData,
    extraction: &BasisExtraction,
) -> Result<String, SpanError> {
    let labels = extraction.selected_labels();
    let mut out = String::new();
    let _ = writeln!(out, "crossed product table of action '{}'", action.name());
    let _ = writeln!(out, "hopf: {}", action.hopf_algebra().name());
    let _ = writeln!(out, "target: {}", action.target().name());
    let _ = writeln!(out, "rank: {}", extraction.rank());
    let basis_list: Vec<String> = labels.iter().map(pair_text).collect();
    let _ = writeln!(out, "basis: {}", basis_list.join(", "));

    let unit_ok = unit_is_two_sided(action, extraction);
    let _ = writeln!(
        out,
        "unit 1#1 is a two-sided identity on the basis: {}",
        if unit_ok { "yes" } else { "no" }
    );
    let crossed_ok =
        action.check_e5().passed() && action.check_e6().passed();
    let _ = writeln!(
        out,
        "associativity (E5, E6): {}",
        if crossed_ok {
            "certified"
        } else {
            "not certified"
        }
    );

    let _ = writeln!(out, "products (generator x generator, in the basis):");
    let gens = extraction.generator_labels();
    for (i, gi) in gens.iter().enumerate() {
        for (j, gj) in gens.iter().enumerate() {
            let product = smash_mul(action, extraction.generator(i), extraction.generator(j));
            let coords = extraction.express(&product)?;
            let _ = writeln!(
                out,
                "  {} * {} = {}",
                pair_text(gi),
                pair_text(gj),
                coords_text(&labels, &coords)
            );
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct ProductRecord {
    row: String,
    col: String,
    coords: Vec<String>,
}

pub fn render_table_records(
    action: &PartialActionData,
    extraction: &BasisExtraction,
) -> Result<String, SpanError> {
    let mut out = String::new();
    let gens = extraction.generator_labels();
    for (i, gi) in gens.iter().enumerate() {
        for (j, gj) in gens.iter().enumerate() {
            let product = smash_mul(action, extraction.generator(i), extraction.generator(j));
            let coords = extraction.express(&product)?;
            let record = ProductRecord {
                row: pair_text(gi),
                col: pair_text(gj),
                coords: coords.iter().map(|c| c.to_string()).collect(),
            };
            let _ = writeln!(out, "{}", serde_json::to_string(&record).unwrap());
        }
    }
    Ok(out)
}

fn unit_is_two_sided(action: &PartialActionData, extraction: &BasisExtraction) -> bool {
    let unit_idx = extraction
        .selected()
        .iter()
        .position(|&i| {
            let (a, h) = extraction.generator_pairs()[i];
            action.target().unit_coords().iter().enumerate().all(|(k, c)| {
                if k == a {
                    c.is_one()
                } else {
                    c.is_zero()
                }
            }) && action
                .hopf_algebra()
                .unit_coords()
                .iter()
                .enumerate()
                .all(|(k, c)| if k == h { c.is_one() } else { c.is_zero() })
        });
    let Some(unit_pos) = unit_idx else {
        return false;
    };
    let unit = extraction.generator(extraction.selected()[unit_pos]);
    extraction.selected().iter().all(|&i| {
        let v = extraction.generator(i);
        smash_mul(action, unit, v) == *v && smash_mul(action, v, unit) == *v
    })
}

/// Runs the full document verification, renders it, and reports whether the
/// required checks passed. Shared by the CLI and the acceptance tests.
pub fn verify_document(
    doc: &DefinitionDocument,
    profile: Profile,
    header: &str,
    records: bool,
) -> (String, bool) {
    let sections = document_verification(doc, profile);
    let passed = sections_passed(&sections);
    let text = if records {
        render_verify_records(&sections)
    } else {
        render_verify_text(header, &sections)
    };
    (text, passed)
}

/// Basis extraction plus rendering for the `crossed` command.
pub fn crossed_emission(
    action: &PartialActionData,
    emit_table: bool,
    records: bool,
) -> Result<String, SpanError> {
    let extraction = extract_basis(action);
    if emit_table {
        if records {
            render_table_records(action, &extraction)
        } else {
            render_table_text(action, &extraction)
        }
    } else if records {
        Ok(render_basis_records(&extraction))
    } else {
        Ok(render_basis_text(action, &extraction))
    }
}
