use super::*;
use crate::algebra::AlgebraElement;
use crate::symbolic::parse_polynomial;

#[test]
fn every_catalog_id_loads() {
    for id in CatalogId::ALL {
        let entry = load(id).unwrap();
        assert_eq!(entry.id, id);
        assert!(!entry.note.is_empty(), "{id} should carry a note");
    }
}

#[test]
fn unknown_ids_are_rejected() {
    assert!(matches!(
        load_by_name("quaternions"),
        Err(CatalogError::UnknownId(_))
    ));
}

#[test]
fn hss_file_defines_sixteen_products() {
    let entry = load(CatalogId::Hss).unwrap();
    let algebra = entry.as_algebra().unwrap();
    assert_eq!(algebra.basis_labels(), ["1", "e1", "e2", "e3"]);
    let mut nonzero = 0;
    for i in 0..4 {
        for j in 0..4 {
            let coords = algebra.product_coords(i, j);
            if coords.iter().any(|p| !p.is_zero()) {
                nonzero += 1;
            }
        }
    }
    // Unit row and column (7) plus e1^2, e1 e2, e2 e1, e1 e3, e3 e1.
    assert_eq!(nonzero, 12);
}

#[test]
fn h4_relations_hold() {
    let entry = load(CatalogId::H4).unwrap();
    let hopf = entry.as_hopf().unwrap();
    let algebra = hopf.algebra();
    let g = AlgebraElement::from_label(algebra, "g").unwrap();
    let nu = AlgebraElement::from_label(algebra, "nu").unwrap();
    assert_eq!(g.mul(&g), AlgebraElement::unit(algebra));
    assert!(nu.mul(&nu).is_zero());
    assert!(g.mul(&nu).add(&nu.mul(&g)).is_zero());
}

#[test]
fn action_hs_nu_row_matches_the_table() {
    let action = load_action(CatalogId::ActionHs);
    let labels = ["1", "e1", "e2", "e3"];
    let expected = ["e3", "e2", "e1", "1"];
    for (a, want) in labels.iter().zip(expected) {
        let got = action.action_by_labels("nu", a).unwrap();
        let want = AlgebraElement::from_label(action.target(), want).unwrap();
        assert_eq!(*got, want);
    }
}

#[test]
fn action_h00_cocycle_nu_gnu_matches_the_table() {
    let action = load_action(CatalogId::ActionH00);
    let got = action.cocycle_by_labels("nu", "gnu").unwrap();
    let coords = got.coords();
    assert!(coords[0].is_zero());
    assert_eq!(coords[1], parse_polynomial("k1*l1").unwrap());
    assert_eq!(coords[2], parse_polynomial("k2*l1").unwrap());
    assert_eq!(
        coords[3],
        parse_polynomial("k3*l1 - k2*l2 + k1*l3").unwrap()
    );
}

#[test]
fn action_parameters_are_registered() {
    assert_eq!(
        load_action(CatalogId::ActionHss)
            .parameters()
            .iter()
            .map(|p| p.name().to_string())
            .collect::<Vec<_>>(),
        ["k1", "k2", "k3", "k4", "l1", "l2", "l3", "l4"]
    );
    assert_eq!(load_action(CatalogId::ActionHs).parameters().len(), 4);
    assert_eq!(load_action(CatalogId::ActionH00).parameters().len(), 7);
}
