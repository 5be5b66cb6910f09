//! The root system built from the Cartan matrix against the Euclidean model of F4.

mod common;

use std::collections::BTreeSet;

use aqclass::realform::color_roots;
use aqclass::rootsys::{CartanMatrix, Root, RootSystem, WeylGroup};
use common::*;

#[test]
fn cartan_matrix_from_inner_products() {
    let s = EUCLIDEAN_F4_SIMPLE;
    let from_geometry: Vec<Vec<i32>> =
        (0..4).map(|i| (0..4).map(|j| 2 * dot(&s[j], &s[i]) / dot(&s[i], &s[i])).collect()).collect();
    assert_eq!(CartanMatrix::new(from_geometry).unwrap(), CartanMatrix::type_f4());
}

#[test]
fn roots_agree_with_euclidean_model() {
    let euclid = euclidean_f4_roots();
    assert_eq!(euclid.len(), 48);
    let from_model: BTreeSet<Root> =
        euclid.iter().map(|v| Root::new(euclidean_coefficients(v).expect("integral").to_vec())).collect();
    let rs = RootSystem::build(CartanMatrix::type_f4()).unwrap();
    let built: BTreeSet<Root> = rs.roots().iter().cloned().collect();
    assert_eq!(from_model, built);
    assert_eq!(rs.highest_root(), &root(&[2, 3, 4, 2]));
}

#[test]
fn forms_agree_with_euclidean_model() {
    let rs = RootSystem::build(CartanMatrix::type_f4()).unwrap();
    let euclid = euclidean_f4_roots();
    let coeffs: Vec<Root> = euclid.iter().map(|v| Root::new(euclidean_coefficients(v).unwrap().to_vec())).collect();
    for (a, ea) in coeffs.iter().zip(&euclid) {
        for (b, eb) in coeffs.iter().zip(&euclid) {
            let expected = 2 * dot(ea, eb) / dot(eb, eb);
            assert_eq!(rs.pairing(a, b), expected, "<{a}, {b}^∨>");
        }
    }
}

#[test]
fn weyl_order_and_compact_part() {
    let rs = RootSystem::build(CartanMatrix::type_f4()).unwrap();
    assert_eq!(WeylGroup::generate(&rs).unwrap().order(), 1152);
    let c = color_roots(&rs, &[0]).unwrap();
    assert_eq!(c.noncompact_positive(), f4_noncompact_positive().as_slice());
    assert_eq!(c.compact_roots().len(), 20);
}

#[test]
fn positive_systems_by_sign_choice() {
    let rs = RootSystem::build(CartanMatrix::type_f4()).unwrap();
    let c = color_roots(&rs, &[0]).unwrap();
    let brute = positive_systems_by_signs(rs.roots(), c.compact_positive(), c.noncompact_positive());
    assert_eq!(brute.len(), 12);
    let mut simple: Vec<Vec<Root>> = brute.iter().map(|p| aqclass::rootsys::indecomposables(p)).collect();
    simple.sort();
    let mut table = simple_systems_data();
    table.sort();
    assert_eq!(simple, table);
}

#[test]
fn classical_root_counts() {
    for (name, roots, weyl) in [("A3", 12, 24), ("B4", 32, 384), ("C4", 32, 384), ("D5", 40, 1920), ("G2", 12, 12)] {
        let rs = RootSystem::build(CartanMatrix::named(name).unwrap()).unwrap();
        assert_eq!(rs.roots().len(), roots, "{name}");
        assert_eq!(WeylGroup::generate(&rs).unwrap().order(), weyl, "{name}");
    }
}
