use super::*;
use crate::symbolic::rational;

// Basis order for the Sweedler algebra throughout: 1, g, nu, gnu.
const ONE: usize = 0;
const G: usize = 1;
const NU: usize = 2;
const GNU: usize = 3;

fn h4_algebra() -> Arc<StructureAlgebra> {
    let products = |i: usize, j: usize| -> Vec<(usize, i64)> {
        match (i, j) {
            (0, j) => vec![(j, 1)],
            (i, 0) => vec![(i, 1)],
            (G, G) => vec![(ONE, 1)],
            (G, NU) => vec![(GNU, 1)],
            (NU, G) => vec![(GNU, -1)],
            (G, GNU) => vec![(NU, 1)],
            (GNU, G) => vec![(NU, -1)],
            _ => vec![], // nu nu, nu gnu, gnu nu, gnu gnu
        }
    };
    let mut table = vec![vec![vec![Polynomial::zero(); 4]; 4]; 4];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            for (k, s) in products(i, j) {
                entry[k] = Polynomial::constant(rational(s));
            }
        }
    }
    let mut unit = vec![Polynomial::zero(); 4];
    unit[0] = Polynomial::one();
    Arc::new(
        StructureAlgebra::new(
            "H4",
            ["1", "g", "nu", "gnu"].map(String::from).to_vec(),
            unit,
            table,
        )
        .unwrap(),
    )
}

fn h4_delta() -> Vec<Vec<(usize, usize, Polynomial)>> {
    let one = Polynomial::one;
    vec![
        vec![(ONE, ONE, one())],
        vec![(G, G, one())],
        vec![(G, NU, one()), (NU, ONE, one())],
        vec![(ONE, GNU, one()), (GNU, G, one())],
    ]
}

fn h4_counit() -> Vec<Polynomial> {
    vec![
        Polynomial::one(),
        Polynomial::one(),
        Polynomial::zero(),
        Polynomial::zero(),
    ]
}

fn h4_antipode(algebra: &Arc<StructureAlgebra>) -> Vec<AlgebraElement> {
    vec![
        AlgebraElement::basis(algebra, ONE),
        AlgebraElement::basis(algebra, G),
        AlgebraElement::basis(algebra, GNU).neg(),
        AlgebraElement::basis(algebra, NU),
    ]
}

fn h4() -> HopfData {
    let algebra = h4_algebra();
    let antipode = h4_antipode(&algebra);
    HopfData::new(algebra, h4_delta(), h4_counit(), antipode).unwrap()
}

fn term(legs: &[usize]) -> SweedlerTerm {
    SweedlerTerm {
        legs: legs.to_vec(),
        coeff: Polynomial::one(),
    }
}

#[test]
fn coproduct_of_the_grouplike() {
    assert_eq!(h4().coproduct_n(G, 2), vec![term(&[G, G])]);
}

#[test]
fn coproduct_of_nu() {
    assert_eq!(h4().coproduct_n(NU, 2), vec![term(&[G, NU]), term(&[NU, ONE])]);
}

#[test]
fn threefold_coproduct_of_nu() {
    assert_eq!(
        h4().coproduct_n(NU, 3),
        vec![
            term(&[G, G, NU]),
            term(&[G, NU, ONE]),
            term(&[NU, ONE, ONE])
        ]
    );
}

#[test]
fn coproduct_of_gnu() {
    // Delta(g nu) = Delta(g) Delta(nu) = 1 (x) gnu + gnu (x) g.
    assert_eq!(
        h4().coproduct_n(GNU, 2),
        vec![term(&[ONE, GNU]), term(&[GNU, G])]
    );
}

#[test]
fn coproduct_by_label_rejects_unknown_labels() {
    assert!(matches!(
        h4().coproduct_by_label("mu", 2),
        Err(AlgebraError::UnknownLabel(_))
    ));
    assert_eq!(h4().coproduct_by_label("nu", 1).unwrap(), vec![term(&[NU])]);
}

#[test]
fn left_and_right_nesting_agree_up_to_four() {
    let h = h4();
    for n in 1..=4 {
        for b in 0..4 {
            assert_eq!(h.coproduct_n(b, n), h.coproduct_n_right(b, n));
        }
    }
}

#[test]
fn counit_contracts_any_leg() {
    let h = h4();
    for n in 2..=4usize {
        for b in 0..4 {
            let expanded = h.coproduct_n(b, n);
            for leg in 0..n {
                let mut contracted: std::collections::BTreeMap<Vec<usize>, Polynomial> =
                    std::collections::BTreeMap::new();
                for t in &expanded {
                    let mut legs = t.legs.clone();
                    let gone = legs.remove(leg);
                    let coeff = &t.coeff * h.counit(gone);
                    let slot = contracted.entry(legs).or_default();
                    *slot = &*slot + &coeff;
                }
                let contracted: Vec<SweedlerTerm> = contracted
                    .into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(legs, coeff)| SweedlerTerm { legs, coeff })
                    .collect();
                assert_eq!(contracted, h.coproduct_n(b, n - 1), "leg {leg} of {b}, n={n}");
            }
        }
    }
}

#[test]
fn nu_coproducts_have_n_terms() {
    let h = h4();
    for n in 1..=4 {
        assert_eq!(h.coproduct_n(NU, n).len(), n);
    }
}

#[test]
fn h4_is_a_coalgebra() {
    let report = h4().check_coalgebra();
    assert!(report.passed());
    assert_eq!(report.entries.len(), 12);
}

#[test]
fn broken_coproduct_fails_the_counit_law() {
    let algebra = h4_algebra();
    let mut delta = h4_delta();
    delta[NU] = vec![(NU, NU, Polynomial::one())];
    let antipode = h4_antipode(&algebra);
    let h = HopfData::new(algebra, delta, h4_counit(), antipode).unwrap();
    let report = h.check_coalgebra();
    assert!(!report.passed());
    assert!(report
        .counterexamples()
        .any(|e| e.tuple == ["counit_left", "nu"] || e.tuple == ["counit_right", "nu"]));
}

#[test]
fn broken_counit_fails() {
    let algebra = h4_algebra();
    let mut counit = h4_counit();
    counit[G] = Polynomial::zero();
    let antipode = h4_antipode(&algebra);
    let h = HopfData::new(algebra, h4_delta(), counit, antipode).unwrap();
    assert!(!h.check_coalgebra().passed());
}

#[test]
fn h4_antipode_laws_hold() {
    let report = h4().check_antipode();
    assert!(report.passed());
    assert_eq!(report.entries.len(), 8);
}

#[test]
fn wrong_antipode_sign_fails_but_grouplike_entries_survive() {
    let algebra = h4_algebra();
    let mut antipode = h4_antipode(&algebra);
    antipode[NU] = AlgebraElement::basis(&algebra, GNU); // S(nu) := gnu
    let h = HopfData::new(algebra, h4_delta(), h4_counit(), antipode).unwrap();
    let report = h.check_antipode();
    assert!(!report.passed());
    // The grouplike's entries only involve S(g) = g and still pass.
    for e in &report.entries {
        if e.tuple[1] == "g" {
            assert!(e.passed, "grouplike entry should pass: {:?}", e.tuple);
        }
        if e.tuple[1] == "nu" {
            assert!(!e.passed);
        }
    }
}

#[test]
fn h4_is_a_bialgebra() {
    let report = h4().check_bialgebra_compat();
    assert!(report.passed());
    assert_eq!(report.entries.len(), 32);
}

#[test]
fn wrong_stored_delta_gnu_breaks_compatibility_at_g_nu() {
    let algebra = h4_algebra();
    let mut delta = h4_delta();
    delta[GNU] = vec![(G, GNU, Polynomial::one()), (GNU, ONE, Polynomial::one())];
    let antipode = h4_antipode(&algebra);
    let h = HopfData::new(algebra, delta, h4_counit(), antipode).unwrap();
    let report = h.check_bialgebra_compat();
    assert!(!report.passed());
    assert!(report
        .counterexamples()
        .any(|e| e.tuple == ["delta", "g", "nu"]));
    // Pairs involving the identity stay fine: Delta(1) = 1 (x) 1.
    for e in &report.entries {
        if e.tuple[0] == "delta" && e.tuple[1] == "1" {
            assert!(e.passed);
        }
    }
}
