use polyalg::{
    groebner_basis, q, IdealPresentation, Monomial, MonomialOrder, Poly, PolyError, PolyRing, QuotientDimension,
};
use proptest::prelude::*;

const N: usize = 3;

fn poly_strategy() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::array::uniform3(0u32..3), -5i64..=5, 1i64..=3), 0..5).prop_map(|terms| {
        Poly::from_terms(
            N,
            terms.into_iter().map(|(e, n, d)| (Monomial::from_exponents(e.to_vec()), q(n, d))),
        )
    })
}

fn ring() -> PolyRing {
    PolyRing::new(["x", "y", "z"]).unwrap()
}

proptest! {
    #[test]
    fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn format_parse_round_trip(a in poly_strategy()) {
        let r = ring();
        prop_assert_eq!(r.parse(&r.format(&a)).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly_strategy(), b in poly_strategy(), x in -4i64..4, y in -4i64..4, z in 1i64..4) {
        let pt = [q(x, 1), q(y, 2), q(1, z)];
        prop_assert_eq!((&a * &b).evaluate(&pt), a.evaluate(&pt) * b.evaluate(&pt));
    }

    #[test]
    fn groebner_contains_generators(a in poly_strategy(), b in poly_strategy(), f in poly_strategy()) {
        let gens = vec![a.clone(), b.clone()];
        let gb = groebner_basis(&gens, N, MonomialOrder::Grevlex, 2000).unwrap();
        prop_assert!(gb.contains(&a));
        prop_assert!(gb.contains(&b));
        prop_assert!(gb.contains(&(&f * &a)));
        let nf = gb.normal_form(&f);
        prop_assert_eq!(gb.normal_form(&nf), nf.clone());
        prop_assert!(gb.contains(&(&f - &nf)));
    }

    #[test]
    fn reduced_basis_ignores_generator_order(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        let g1 = groebner_basis(&[a.clone(), b.clone(), c.clone()], N, MonomialOrder::Grevlex, 2000).unwrap();
        let g2 = groebner_basis(&[c, a, b], N, MonomialOrder::Grevlex, 2000).unwrap();
        prop_assert_eq!(g1.polys(), g2.polys());
    }
}

fn cyclic3() -> IdealPresentation {
    let r = ring();
    let gens = ["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"].iter().map(|s| r.parse(s).unwrap()).collect();
    IdealPresentation::new(r, gens)
}

#[test]
fn cyclic3_dimension_under_every_order() {
    for order in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Block { first: 1 }] {
        let dim = cyclic3().with_order(order).quotient_dimension(10_000).unwrap();
        assert_eq!(dim, QuotientDimension::Finite(6), "{order:?}");
    }
}

#[test]
fn lex_basis_is_triangular() {
    let gb = cyclic3().groebner_with(MonomialOrder::Lex, 10_000).unwrap();
    let r = ring();
    assert!(gb.contains(&r.parse("z^3 - 1").unwrap()));
}

#[test]
fn positive_dimensional_ideal() {
    let r = ring();
    let ideal = IdealPresentation::new(r.clone(), vec![r.parse("x*y").unwrap()]);
    assert_eq!(ideal.quotient_dimension(100).unwrap(), QuotientDimension::Infinite);
}

#[test]
fn localization_detects_units() {
    let r = ring();
    // x(x - 1) = 0 with x inverted forces x = 1
    let ideal = IdealPresentation::new(r.clone(), vec![r.parse("x^2 - x").unwrap()]).with_inverted(vec![r.var("x")]);
    let lb = ideal.groebner(1000).unwrap();
    assert!(lb.contains(&r.parse("x - 1").unwrap()));
    // inverting something nilpotent kills the ring
    let ideal = IdealPresentation::new(r.clone(), vec![r.parse("y^3").unwrap()]).with_inverted(vec![r.var("y")]);
    assert!(ideal.groebner(1000).unwrap().is_unit_ideal());
}

#[test]
fn budget_is_enforced() {
    let r = ring();
    let gens = ["x^2 + y*z - 1", "y^2 + x*z - 2", "z^2 + x*y - 3"].iter().map(|s| r.parse(s).unwrap()).collect();
    let ideal = IdealPresentation::new(r, gens);
    assert!(ideal.groebner(10_000).is_ok());
    let err = ideal.groebner(1).unwrap_err();
    match err {
        PolyError::BudgetExceeded { budget, stats } => {
            assert_eq!(budget, 1);
            assert!(stats.pairs_reduced >= 1);
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn specialization_drops_parameters() {
    let r = PolyRing::new(["x", "t"]).unwrap();
    let ideal = IdealPresentation::new(r.clone(), vec![r.parse("x^2 - t").unwrap()]);
    let s = ideal.specialize(&[("t", q(4, 1))]).unwrap();
    assert_eq!(s.ring.nvars(), 1);
    assert_eq!(s.quotient_dimension(100).unwrap(), QuotientDimension::Finite(2));
    let gb = s.groebner(100).unwrap();
    assert!(gb.contains(&s.ring.parse("x^2 - 4").unwrap()));
}
