use super::*;
use crate::algebra::AlgebraElement;
use crate::catalog::{self, CatalogId};
use crate::io::expr::{parse_expr, tokenize_line};
use crate::io::{EvalContext, Value};
use crate::symbolic::parse_polynomial;
use std::collections::BTreeSet;

#[test]
fn catalog_files_round_trip_through_the_printer() {
    for id in CatalogId::ALL {
        let doc = parse_definition(id.source()).unwrap();
        let printed = print_document(&doc);
        let reparsed = parse_definition(&printed).unwrap_or_else(|e| {
            panic!("printed {id} failed to parse: {e}\n{printed}");
        });
        assert_eq!(doc, reparsed, "round trip for {id}");
    }
}

#[test]
fn undeclared_label_in_a_product_key() {
    let text = "\
algebra A {
  basis 1 e1
  unit 1
  mul e1 e5 = 1
}
";
    match parse_definition(text) {
        Err(ParseError::UndeclaredLabel { name, pos }) => {
            assert_eq!(name, "e5");
            assert_eq!(pos.line, 4);
        }
        other => panic!("expected UndeclaredLabel, got {other:?}"),
    }
}

#[test]
fn undeclared_parameter_in_a_cocycle_value() {
    let text = "\
params k1
algebra A {
  basis 1 e1
  unit 1
  mul 1 1 = 1
}
hopf H {
  basis 1
  unit 1
  mul 1 1 = 1
  delta 1 = 1:1
  counit 1 = 1
  antipode 1 = 1
}
action act1 {
  hopf H
  target A
  cocycle 1 1 = m1*e1
}
";
    match parse_definition(text) {
        Err(ParseError::UndeclaredParameter { name, pos }) => {
            assert_eq!(name, "m1");
            assert_eq!(pos.line, 18);
        }
        other => panic!("expected UndeclaredParameter, got {other:?}"),
    }
}

#[test]
fn duplicate_blocks_are_rejected() {
    let text = "\
algebra A {
  basis 1
  unit 1
}
algebra A {
  basis 1
  unit 1
}
";
    assert!(matches!(
        parse_definition(text),
        Err(ParseError::DuplicateBlock { name }) if name == "A"
    ));
}

#[test]
fn syntax_errors_carry_a_location() {
    match parse_definition("algebra A %\n") {
        Err(ParseError::Syntax { pos, .. }) => {
            assert_eq!(pos.line, 1);
            assert_eq!(pos.col, 11);
        }
        other => panic!("expected Syntax, got {other:?}"),
    }
    // Unclosed block.
    assert!(matches!(
        parse_definition("algebra A {\n  basis 1\n"),
        Err(ParseError::Syntax { .. })
    ));
}

#[test]
fn duplicate_table_entries_are_rejected() {
    let text = "\
algebra A {
  basis 1 e1
  unit 1
  mul e1 e1 = 1
  mul e1 e1 = -1
}
";
    assert!(matches!(
        parse_definition(text),
        Err(ParseError::DuplicateEntry { .. })
    ));
}

#[test]
fn missing_hopf_pieces_are_reported() {
    let text = "\
hopf H {
  basis 1 g
  unit 1
  mul 1 1 = 1
  mul 1 g = g
  mul g 1 = g
  mul g g = 1
  delta 1 = 1:1
  counit 1 = 1
  counit g = 1
  antipode 1 = 1
  antipode g = g
}
";
    match parse_definition(text) {
        Err(ParseError::Missing { block, what }) => {
            assert_eq!(block, "H");
            assert!(what.contains("delta"), "{what}");
        }
        other => panic!("expected Missing, got {other:?}"),
    }
}

#[test]
fn action_references_must_resolve() {
    let text = "\
algebra A {
  basis 1
  unit 1
  mul 1 1 = 1
}
action a {
  hopf Nope
  target A
}
";
    assert!(matches!(
        parse_definition(text),
        Err(ParseError::UnknownReference { name, .. }) if name == "Nope"
    ));
}

#[test]
fn eval_act_and_omega_examples() {
    let entry = catalog::load(CatalogId::ActionHss).unwrap();
    let action = entry.as_action().unwrap();
    let params: BTreeSet<String> = entry.document.parameters.iter().cloned().collect();
    let ctx = EvalContext {
        parameters: &params,
        primary: action.target(),
        secondary: Some(action.hopf_algebra()),
        action: Some(action),
    };
    let eval = |text: &str| -> Value {
        let tokens = tokenize_line(text, 1).unwrap();
        let expr = parse_expr(&tokens, Pos { line: 1, col: 1 }).unwrap();
        ctx.eval(&expr, Some(action.target())).unwrap()
    };

    match eval("act(nu, e3)") {
        Value::Elem(e) => assert_eq!(e.to_string(), "k2*e2 + k1*e3"),
        other => panic!("unexpected value {other:?}"),
    }
    match eval("act(nu, e3) * act(nu, e3)") {
        Value::Elem(e) => assert!(e.is_zero()),
        other => panic!("unexpected value {other:?}"),
    }
    match eval("sharp(e1, nu) * sharp(e2, nu)") {
        Value::Tensor(t) => assert_eq!(t.to_string(), "(k1^2 - k2^2)*e3(x)1"),
        other => panic!("unexpected value {other:?}"),
    }
    match eval("omega(nu, nu) - omega(nu, nu)") {
        Value::Elem(e) => assert!(e.is_zero()),
        other => panic!("unexpected value {other:?}"),
    }
    // `1` in an element position coerces through the declared unit.
    match eval("act(1, e1) - e1") {
        Value::Elem(e) => assert!(e.is_zero()),
        other => panic!("unexpected value {other:?}"),
    }
}

#[test]
fn eval_omega_for_the_hs_action() {
    let entry = catalog::load(CatalogId::ActionHs).unwrap();
    let action = entry.as_action().unwrap();
    let params: BTreeSet<String> = entry.document.parameters.iter().cloned().collect();
    let ctx = EvalContext {
        parameters: &params,
        primary: action.target(),
        secondary: Some(action.hopf_algebra()),
        action: Some(action),
    };
    let tokens = tokenize_line("omega(gnu, nu)", 1).unwrap();
    let expr = parse_expr(&tokens, Pos { line: 1, col: 1 }).unwrap();
    match ctx.eval(&expr, Some(action.target())).unwrap() {
        Value::Elem(e) => {
            assert_eq!(e.to_string(), "l4*1 + l3*e1 - l2*e2 + l1*e3");
        }
        other => panic!("unexpected value {other:?}"),
    }
}

#[test]
fn eval_reports_unknown_names_and_bad_types() {
    let entry = catalog::load(CatalogId::ActionHss).unwrap();
    let action = entry.as_action().unwrap();
    let params: BTreeSet<String> = entry.document.parameters.iter().cloned().collect();
    let ctx = EvalContext {
        parameters: &params,
        primary: action.target(),
        secondary: Some(action.hopf_algebra()),
        action: Some(action),
    };
    let try_eval = |text: &str| -> Result<Value, ParseError> {
        let tokens = tokenize_line(text, 1).unwrap();
        let expr = parse_expr(&tokens, Pos { line: 1, col: 1 })?;
        ctx.eval(&expr, Some(action.target()))
    };

    assert!(matches!(
        try_eval("act(nu, e9)"),
        Err(ParseError::UndeclaredParameter { name, .. }) if name == "e9"
    ));
    assert!(matches!(try_eval("mystery(1, 2)"), Err(ParseError::Eval { .. })));
    // e1 lives in the target, not in the Hopf algebra.
    assert!(matches!(try_eval("omega(e1, nu)"), Err(ParseError::Eval { .. })));
    assert!(matches!(try_eval("act(nu)"), Err(ParseError::Eval { .. })));
    assert!(matches!(try_eval("act(nu, e1) +"), Err(ParseError::Syntax { .. })));
}

#[test]
fn ambiguous_labels_resolve_by_expected_algebra() {
    let entry = catalog::load(CatalogId::ActionHss).unwrap();
    let action = entry.as_action().unwrap();
    let params: BTreeSet<String> = entry.document.parameters.iter().cloned().collect();
    let ctx = EvalContext {
        parameters: &params,
        primary: action.target(),
        secondary: Some(action.hopf_algebra()),
        action: Some(action),
    };
    // `g` only exists in the Hopf algebra, so a bare `g` resolves there even
    // with the target as the hint.
    let tokens = tokenize_line("act(g, e2)", 1).unwrap();
    let expr = parse_expr(&tokens, Pos { line: 1, col: 1 }).unwrap();
    match ctx.eval(&expr, Some(action.target())).unwrap() {
        Value::Elem(e) => assert!(e.is_zero()),
        other => panic!("unexpected value {other:?}"),
    }
}

#[test]
fn polynomial_coefficients_parse_inside_elements() {
    let text = "\
params k1 k2
algebra A {
  basis 1 e1
  unit 1
  mul 1 1 = 1
  mul 1 e1 = e1
  mul e1 1 = e1
  mul e1 e1 = (k1^2 + k2^2)*1 + (3/2)*k1*e1
}
";
    let doc = parse_definition(text).unwrap();
    let algebra = &doc.algebras[0];
    let coords = algebra.product_coords(1, 1);
    assert_eq!(coords[0], parse_polynomial("k1^2 + k2^2").unwrap());
    assert_eq!(coords[1], parse_polynomial("(3/2)*k1").unwrap());
}

#[test]
fn verify_document_sections_cover_all_blocks() {
    use crate::partial_action::Profile;
    let entry = catalog::load(CatalogId::ActionHss).unwrap();
    let sections = render::document_verification(&entry.document, Profile::Core);
    let titles: Vec<&str> = sections.iter().map(|s| s.title.as_str()).collect();
    assert_eq!(
        titles,
        ["algebra Hss", "hopf H4", "action hss_action"]
    );
    assert!(render::sections_passed(&sections));
    // Under the core profile E5/E6 and the antipode check are informational.
    let action_run = &sections[2].run;
    for check in ["E5", "E6"] {
        let outcome = action_run
            .outcomes
            .iter()
            .find(|o| o.report.check == check)
            .unwrap();
        assert!(!outcome.required);
    }
    let hopf_run = &sections[1].run;
    let antipode = hopf_run
        .outcomes
        .iter()
        .find(|o| o.report.check == "antipode")
        .unwrap();
    assert!(!antipode.required);
}

#[test]
fn record_stream_counts_match_the_contract() {
    use crate::partial_action::Profile;
    let entry = catalog::load(CatalogId::ActionHss).unwrap();
    let sections = render::document_verification(&entry.document, Profile::Crossed);
    let records = render::render_verify_records(&sections);
    let mut counts: std::collections::BTreeMap<String, usize> = Default::default();
    for line in records.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        *counts
            .entry(v["check"].as_str().unwrap().to_string())
            .or_default() += 1;
    }
    assert_eq!(counts["E1"], 4);
    assert_eq!(counts["E2"], 64);
    assert_eq!(counts["E3"], 64);
    assert_eq!(counts["E4"], 16);
    assert_eq!(counts["E5"], 4);
    assert_eq!(counts["E6"], 64);
    // Two algebras' structural checks: 64 + 8 each.
    assert_eq!(counts["associativity"], 128);
    assert_eq!(counts["unitality"], 16);
    assert_eq!(counts["coalgebra"], 12);
    assert_eq!(counts["bialgebra"], 32);
    assert_eq!(counts["antipode"], 8);
}

#[test]
fn unit_element_display_round_trips_through_eval() {
    let entry = catalog::load(CatalogId::Hss).unwrap();
    let algebra = entry.as_algebra().unwrap();
    let unit = AlgebraElement::unit(algebra);
    assert_eq!(unit.to_string(), "1");
}
