use super::*;
use crate::symbolic::parse_polynomial;
use proptest::prelude::*;

/// Signed basis products, the independent oracle for the built-in algebras:
/// `f(i, j)` lists `(index, sign)` pairs of `basis[i] * basis[j]`.
type Products = fn(usize, usize) -> Vec<(usize, i64)>;

fn hss_products(i: usize, j: usize) -> Vec<(usize, i64)> {
    match (i, j) {
        (0, j) => vec![(j, 1)],
        (i, 0) => vec![(i, 1)],
        (1, 1) => vec![(0, 1)],
        (1, 2) => vec![(3, 1)],
        (2, 1) => vec![(3, -1)],
        (1, 3) => vec![(2, 1)],
        (3, 1) => vec![(2, -1)],
        _ => vec![], // e2^2, e3^2, e2 e3, e3 e2
    }
}

fn hs_products(i: usize, j: usize) -> Vec<(usize, i64)> {
    match (i, j) {
        (0, j) => vec![(j, 1)],
        (i, 0) => vec![(i, 1)],
        (1, 1) => vec![(0, -1)],
        (2, 2) | (3, 3) => vec![(0, 1)],
        (1, 2) => vec![(3, 1)],
        (2, 1) => vec![(3, -1)],
        (2, 3) => vec![(1, -1)],
        (3, 2) => vec![(1, 1)],
        (3, 1) => vec![(2, 1)],
        (1, 3) => vec![(2, -1)],
        _ => unreachable!(),
    }
}

fn h00_products(i: usize, j: usize) -> Vec<(usize, i64)> {
    match (i, j) {
        (0, j) => vec![(j, 1)],
        (i, 0) => vec![(i, 1)],
        (1, 2) => vec![(3, 1)],
        (2, 1) => vec![(3, -1)],
        _ => vec![],
    }
}

fn mk(name: &str, basis: &[&str], products: Products) -> Arc<StructureAlgebra> {
    let dim = basis.len();
    let mut table = vec![vec![vec![Polynomial::zero(); dim]; dim]; dim];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            for (k, sign) in products(i, j) {
                entry[k] = &entry[k] + &Polynomial::integer(sign);
            }
        }
    }
    let mut unit = vec![Polynomial::zero(); dim];
    unit[0] = Polynomial::one();
    Arc::new(
        StructureAlgebra::new(
            name,
            basis.iter().map(|s| s.to_string()).collect(),
            unit,
            table,
        )
        .unwrap(),
    )
}

fn quaternionic(name: &str, products: Products) -> Arc<StructureAlgebra> {
    mk(name, &["1", "e1", "e2", "e3"], products)
}

/// Brute-force associativity over integer coordinate vectors, entirely
/// independent of the `Polynomial`-backed implementation path.
fn oracle_associative(products: Products, dim: usize) -> bool {
    let mul = |x: &[i64], y: &[i64]| {
        let mut out = vec![0i64; dim];
        for i in 0..dim {
            for j in 0..dim {
                if x[i] == 0 || y[j] == 0 {
                    continue;
                }
                for (k, s) in products(i, j) {
                    out[k] += x[i] * y[j] * s;
                }
            }
        }
        out
    };
    let basis = |i: usize| {
        let mut v = vec![0i64; dim];
        v[i] = 1;
        v
    };
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let lhs = mul(&mul(&basis(i), &basis(j)), &basis(k));
                let rhs = mul(&basis(i), &mul(&basis(j), &basis(k)));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn elem_mul_follows_the_tables() {
    let hss = quaternionic("Hss", hss_products);
    let e = |i| AlgebraElement::basis(&hss, i);
    assert_eq!(e(1).mul(&e(2)), e(3));
    assert!(e(2).mul(&e(3)).is_zero());

    let hs = quaternionic("Hs", hs_products);
    let e1 = AlgebraElement::basis(&hs, 1);
    assert_eq!(e1.mul(&e1), AlgebraElement::unit(&hs).neg());
}

#[test]
fn unit_multiplies_trivially() {
    let hss = quaternionic("Hss", hss_products);
    let x = AlgebraElement::new(
        &hss,
        vec![
            parse_polynomial("k1").unwrap(),
            parse_polynomial("k2 - 1").unwrap(),
            Polynomial::zero(),
            parse_polynomial("3*l1").unwrap(),
        ],
    );
    assert_eq!(AlgebraElement::unit(&hss).mul(&x), x);
    assert_eq!(x.mul(&AlgebraElement::unit(&hss)), x);
}

#[test]
fn associativity_of_hss_against_oracle() {
    assert!(oracle_associative(hss_products, 4));
    let report = quaternionic("Hss", hss_products).check_associative();
    assert!(report.passed());
    assert_eq!(report.entries.len(), 64);
}

#[test]
fn associativity_of_h00_against_oracle() {
    assert!(oracle_associative(h00_products, 4));
    let report = quaternionic("H00", h00_products).check_associative();
    assert!(report.passed());
    assert_eq!(report.entries.len(), 64);
}

#[test]
fn associativity_detects_a_broken_table() {
    // Redefine e2 e3 := e1 inside Hss.
    let broken: Products = |i, j| match (i, j) {
        (2, 3) => vec![(1, 1)],
        _ => hss_products(i, j),
    };
    assert!(!oracle_associative(broken, 4));
    let report = quaternionic("HssBroken", broken).check_associative();
    assert!(!report.passed());
    let offending: Vec<Vec<String>> = report
        .counterexamples()
        .map(|e| e.tuple.clone())
        .collect();
    // (e1 e2) e3 = e2 e3 = e1 but e1 (e2 e3) = e1 e1 = 1.
    assert!(offending.contains(&vec![
        "e1".to_string(),
        "e2".to_string(),
        "e3".to_string()
    ]));
}

#[test]
fn unitality_passes_for_the_builtins() {
    assert!(quaternionic("Hs", hs_products).check_unital().passed());
    assert!(quaternionic("H00", h00_products).check_unital().passed());
}

#[test]
fn a_nilpotent_cannot_be_a_unit() {
    let h00 = quaternionic("H00", h00_products);
    let mut unit = vec![Polynomial::zero(); 4];
    unit[1] = Polynomial::one(); // e1, with e1^2 = 0
    let broken = Arc::new(
        StructureAlgebra::new(
            "H00BadUnit",
            h00.basis_labels().to_vec(),
            unit,
            (0..4)
                .map(|i| (0..4).map(|j| h00.product_coords(i, j).to_vec()).collect())
                .collect(),
        )
        .unwrap(),
    );
    let report = broken.check_unital();
    assert!(!report.passed());
}

#[test]
fn antisymmetric_products_hold_as_computed_facts() {
    let hss = quaternionic("Hss", hss_products);
    let e = |i| AlgebraElement::basis(&hss, i);
    assert_eq!(e(2).mul(&e(1)), e(1).mul(&e(2)).neg());
    assert_eq!(e(3).mul(&e(1)), e(1).mul(&e(3)).neg());
}

#[test]
fn mixing_algebras_is_an_error() {
    let hss = quaternionic("Hss", hss_products);
    let h00 = quaternionic("H00", h00_products);
    let x = AlgebraElement::basis(&hss, 1);
    let y = AlgebraElement::basis(&h00, 1);
    assert!(matches!(
        x.checked_mul(&y),
        Err(AlgebraError::Mismatch { .. })
    ));
    assert!(matches!(
        x.checked_add(&y),
        Err(AlgebraError::Mismatch { .. })
    ));
}

#[test]
fn tensor_normalization_drops_cancelled_terms() {
    let hss = quaternionic("Hss", hss_products);
    let h4 = mk("H4", &["1", "g", "nu", "gnu"], |i, j| match (i, j) {
        (0, j) => vec![(j, 1)],
        (i, 0) => vec![(i, 1)],
        (1, 1) => vec![(0, 1)],
        (1, 2) => vec![(3, 1)],
        (2, 1) => vec![(3, -1)],
        (1, 3) => vec![(2, 1)],
        (3, 1) => vec![(2, -1)],
        _ => vec![],
    });
    let k1 = parse_polynomial("k1").unwrap();
    let mut t = TensorElement::zero(&hss, &h4);
    t.add_term(0, 1, k1.clone());
    t.add_term(0, 1, -&k1);
    assert!(t.is_zero());
    assert_eq!(t.to_string(), "0");

    // 1(x)gnu + l1*(1(x)g) has exactly two coordinates.
    let mut u = TensorElement::zero(&hss, &h4);
    u.add_term(0, 3, Polynomial::one());
    u.add_term(0, 1, parse_polynomial("l1").unwrap());
    assert_eq!(u.terms().count(), 2);
    assert_eq!(u.to_string(), "l1*1(x)g + 1(x)gnu");

    let mut single = TensorElement::zero(&hss, &h4);
    single.add_term(3, 0, parse_polynomial("k1^2 - k2^2").unwrap());
    assert_eq!(single.to_string(), "(k1^2 - k2^2)*e3(x)1");
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((-3i64..=3, 0usize..3), 0..3).prop_map(|terms| {
        let names = ["k1", "k2", "l1"];
        let mut p = Polynomial::zero();
        for (c, i) in terms {
            let m = crate::symbolic::Monomial::parameter(crate::symbolic::Parameter::new(
                names[i],
            ));
            p = &p + &Polynomial::term(m, crate::symbolic::rational(c));
        }
        p
    })
}

fn hss_element() -> impl Strategy<Value = Vec<Polynomial>> {
    proptest::collection::vec(small_poly(), 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_bilinear(
        a in small_poly(),
        b in small_poly(),
        x in hss_element(),
        y in hss_element(),
        z in hss_element(),
    ) {
        let hss = quaternionic("Hss", hss_products);
        let x = AlgebraElement::new(&hss, x);
        let y = AlgebraElement::new(&hss, y);
        let z = AlgebraElement::new(&hss, z);
        let lhs = x.scale(&a).add(&y.scale(&b)).mul(&z);
        let rhs = x.mul(&z).scale(&a).add(&y.mul(&z).scale(&b));
        prop_assert_eq!(lhs, rhs);
    }
}
