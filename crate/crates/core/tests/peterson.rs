use peterson::peterson::{
    build_centralizer, build_yp, build_yp_star, fiber_analysis, generic_rank, homogeneity_check, levi_qbar_is_one, qloc,
    rational_equal_mod, redundancy_check, redundant_components,
};
use peterson::rootdata::RootDatum;
use polyalg::{IdealPresentation, RationalFunction, DEFAULT_BUDGET};

const SEEDS: [u64; 3] = [1, 2, 3];

fn datum(t: &str, r: usize) -> RootDatum {
    RootDatum::parse(t, r).unwrap()
}

#[test]
fn sl2_qbar() {
    let d = datum("A", 1);
    let pres = build_yp(&d, &d.borel(), true).unwrap();
    let ring = pres.ring();
    assert_eq!(pres.qbar[0], ring.parse("x_1^2 + 2*h_1*x_1").unwrap());
    assert_eq!(pres.ideal.generators, vec![ring.parse("x_1^2 + 2*h_1*x_1 - q_1").unwrap()]);
    let plain = build_yp(&d, &d.borel(), false).unwrap();
    assert_eq!(plain.qbar[0], plain.ring().parse("x_1^2").unwrap());
}

#[test]
fn sl2_star_inverts_cell_coordinate() {
    let d = datum("A", 1);
    let pres = build_yp_star(&d, &d.borel(), true).unwrap();
    let ring = pres.ring();
    assert_eq!(pres.ideal.inverted, vec![ring.parse("x_1^2").unwrap()]);
}

#[test]
fn sl2_centralizer() {
    let d = datum("A", 1);
    let pres = build_centralizer(&d, true).unwrap();
    let ring = pres.ring().clone();
    let expected = IdealPresentation::new(ring.clone(), vec![ring.parse("z_1*(1 - 2*h_1*y_1) - 1").unwrap()])
        .with_inverted(vec![ring.var("z_1")]);
    let a = pres.ideal.groebner(DEFAULT_BUDGET).unwrap();
    let b = expected.groebner(DEFAULT_BUDGET).unwrap();
    assert_eq!(a.basis.polys(), b.basis.polys());
    // h = 0 forces z = 1
    let flat = pres.ideal.specialize(&[("h_1", polyalg::q(0, 1))]).unwrap();
    let fb = flat.groebner(DEFAULT_BUDGET).unwrap();
    assert!(fb.contains(&(&flat.ring.var("z_1") - &flat.ring.one())));
}

#[test]
fn sl2_qloc() {
    let d = datum("A", 1);
    let res = qloc(&d, &d.borel(), true).unwrap();
    let ring = res.centralizer.ring().clone();
    let basis = res.centralizer.ideal.groebner(DEFAULT_BUDGET).unwrap();
    let y = RationalFunction::from_poly(ring.var("y_1"));
    let h = RationalFunction::from_poly(ring.var("h_1"));
    let two = RationalFunction::from_poly(ring.parse("2").unwrap());
    let target = &y.powi(-2) - &(&(&two * &h) * &y.recip());
    assert!(rational_equal_mod(&basis, &res.values[0], &target), "{:?}", res.values[0]);
}

#[test]
fn a2_borel_shape() {
    let d = datum("A", 2);
    let pres = build_yp(&d, &d.borel(), true).unwrap();
    assert_eq!(pres.cell_count(), 3);
    assert_eq!(pres.ideal.generators.len(), 3);
    assert_eq!(homogeneity_check(&pres), (true, true));
}

#[test]
fn ranks_and_fibers() {
    let cases: Vec<(&str, usize, Vec<usize>, usize)> = vec![
        ("A", 1, vec![0], 2),
        ("A", 2, vec![0, 1], 6),
        ("A", 2, vec![0], 3),
        ("A", 2, vec![1], 3),
        ("B", 2, vec![0, 1], 8),
        ("B", 2, vec![0], 4),
        ("B", 2, vec![1], 4),
    ];
    for (t, r, ex, expected) in cases {
        let d = datum(t, r);
        let p = d.parabolic(&ex).unwrap();
        let pres = build_yp(&d, &p, true).unwrap();
        assert_eq!(homogeneity_check(&pres), (true, true), "{t}{r} {ex:?}");
        let report = generic_rank(&pres, &SEEDS, DEFAULT_BUDGET).unwrap();
        assert_eq!(report.rank(), expected, "{t}{r} {ex:?} {report:?}");
        assert_eq!(fiber_analysis(&pres, DEFAULT_BUDGET).unwrap(), (expected, true), "{t}{r} {ex:?}");
        assert!(levi_qbar_is_one(&pres, DEFAULT_BUDGET).unwrap().iter().all(|(_, ok)| *ok), "{t}{r} {ex:?}");
        assert!(redundancy_check(&d, &p).unwrap());
        assert!(redundant_components(&pres).iter().all(|(_, c)| c.is_zero()));
    }
}
