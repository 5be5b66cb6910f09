mod common;

use std::collections::HashSet;
use std::sync::OnceLock;

use aqclass::cohomology::Polynomial;
use aqclass::parabolics::build_q_x;
use aqclass::realform::{color_roots, Coloring};
use aqclass::rootsys::{CartanMatrix, Root, RootSystem, WeylGroup};
use common::f4_report;
use proptest::prelude::*;

struct F4 {
    rs: RootSystem,
    coloring: Coloring,
    weyl: WeylGroup,
}

fn f4() -> &'static F4 {
    static F4: OnceLock<F4> = OnceLock::new();
    F4.get_or_init(|| {
        let rs = RootSystem::build(CartanMatrix::type_f4()).unwrap();
        let coloring = color_roots(&rs, &[0]).unwrap();
        let weyl = WeylGroup::generate(&rs).unwrap();
        F4 { rs, coloring, weyl }
    })
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(0u64..5, 1..8).prop_map(|mut c| {
        *c.last_mut().unwrap() += 1;
        Polynomial::new(c)
    })
}

/// Nonnegative on the compact simple roots `φ2, φ3, φ4` and `δ = 2φ1+3φ2+4φ3+2φ4`.
fn dominant_functional() -> impl Strategy<Value = Vec<i64>> {
    (0i64..=12, 0i64..=12, 0i64..=12).prop_flat_map(|(b, c, d)| {
        let low = -(3 * b + 4 * c + 2 * d) / 2;
        (low..=12).prop_map(move |a| vec![a, b, c, d])
    })
}

proptest! {
    #[test]
    fn simple_reflections_are_involutions(a in 0usize..48, i in 0usize..4) {
        let rs = &f4().rs;
        let alpha = &rs.roots()[a];
        let image = rs.simple_reflection(i, alpha).unwrap();
        prop_assert!(rs.contains(&image));
        prop_assert_eq!(&rs.simple_reflection(i, &image).unwrap(), alpha);
    }

    #[test]
    fn reflections_preserve_roots_and_pairings(a in 0usize..48, b in 0usize..48, c in 0usize..48) {
        let rs = &f4().rs;
        let (x, y, z) = (&rs.roots()[a], &rs.roots()[b], &rs.roots()[c]);
        let sx = rs.reflect(x, z);
        let sy = rs.reflect(y, z);
        prop_assert!(rs.contains(&sx));
        prop_assert_eq!(&rs.reflect(&sx, z), x);
        prop_assert_eq!(rs.form(&sx, &sy), rs.form(x, y));
    }

    #[test]
    fn weyl_elements_permute_roots(w in 0usize..1152) {
        let F4 { rs, weyl, .. } = f4();
        let element = &weyl.elements()[w];
        let image: HashSet<Root> = rs.roots().iter().map(|a| element.apply(a)).collect();
        prop_assert_eq!(image.len(), 48);
        prop_assert!(image.iter().all(|a| rs.contains(a)));
    }

    #[test]
    fn weyl_length_bounded(w in 0usize..1152) {
        let F4 { rs, weyl, .. } = f4();
        let positive: HashSet<Root> = rs.positive_roots().iter().cloned().collect();
        prop_assert!(weyl.elements()[w].length(&positive) <= 24);
    }

    #[test]
    fn polynomial_division_inverts_multiplication(p in polynomial(), q in polynomial()) {
        let product = p.mul(&q);
        prop_assert_eq!(product.div_exact(&q), Some(p.clone()));
        prop_assert_eq!(product.eval_at_one(), p.eval_at_one() * q.eval_at_one());
        prop_assert_eq!(product.to_string().parse::<Polynomial>().unwrap(), product);
    }

    #[test]
    fn palindromes_multiply_to_palindromes(p in polynomial(), q in polynomial()) {
        let pal = |x: &Polynomial| {
            let mut c = x.coeffs().to_vec();
            c.extend(x.coeffs().iter().rev());
            Polynomial::new(c)
        };
        prop_assert!(pal(&p).mul(&pal(&q)).is_palindromic());
    }

    #[test]
    fn q_x_keys_are_classes(x in dominant_functional()) {
        let F4 { rs, coloring, .. } = f4();
        prop_assert!(coloring.compact_positive().iter().all(|a| a.evaluate(&x) >= 0));
        let d = build_q_x(rs, coloring, &x).unwrap();
        prop_assert!(f4_report().row_by_key(&d.u_cap_p).is_some());
        prop_assert_eq!(d.u_roots.len() * 2 + d.levi_roots.len(), 48);
    }

    #[test]
    fn root_parse_round_trip(c in prop::collection::vec(-5i32..=5, 1..6)) {
        let r = Root::new(c.clone());
        prop_assert_eq!(Root::parse(&r.to_string(), c.len()), Some(r));
    }
}

#[test]
fn euler_total_is_frozen() {
    let total: u64 = f4_report().rows.iter().map(|r| r.poincare.eval_at_one()).sum();
    let orders: usize = f4_report().rows.iter().map(|r| r.levi.weyl_order / r.levi.compact_weyl_order).sum();
    assert_eq!(total as usize, orders);
    assert_eq!(total, 130);
}
