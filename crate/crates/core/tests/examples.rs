//! Worked examples for root data, the Chevalley algebra, the presentations
//! and the PLS map, each checked against a hand-computed answer.

use peterson::chevalley::ChevalleyAlgebra;
use peterson::peterson::{
    build_centralizer, build_yp, build_yp_star, cell_roots, levi_qbar_is_one, qloc, rational_equal_mod,
    redundancy_check,
};
use peterson::pls::{phi_pls, pls_degree_check, translation_product_check, PLSImage};
use peterson::rootdata::{cone_membership_equiv, RootDatum};
use polyalg::{q, Poly, PolyRing, RationalFunction, DEFAULT_BUDGET};

fn datum(t: &str, r: usize) -> RootDatum {
    RootDatum::parse(t, r).unwrap()
}

#[test]
fn root_system_shapes() {
    let a1 = datum("A", 1);
    assert_eq!(a1.positive_roots, vec![vec![1]]);
    assert_eq!((a1.ell_g, a1.coroot_norms.clone()), (1, vec![1]));
    assert_eq!(datum("G", 2).ell_g, 3);
    let b2 = datum("B", 2);
    assert_eq!(b2.num_positive(), 4);
    assert_eq!(b2.ell_g, 2);
    assert_eq!(b2.coroot_norms.iter().filter(|&&n| n == 2).count(), 1);
    for r in 1..=6 {
        assert_eq!(datum("A", r).num_positive(), r * (r + 1) / 2);
    }
    for d in RootDatum::all_types_up_to(8) {
        assert!(d.positive_roots.iter().flatten().all(|&c| c >= 0), "{}", d.name());
        for i in 0..d.rank {
            let mut simple = vec![0; d.rank];
            simple[i] = 1;
            assert_eq!(d.pair(&d.two_rho, &simple), 2, "{} i={i}", d.name());
        }
    }
}

#[test]
fn parabolic_cosets() {
    let a2 = datum("A", 2);
    let b = a2.borel();
    assert_eq!((a2.w_p_elements(&b).len(), a2.w_upper_p(&b).len()), (1, 6));
    assert!(b.w_p.is_identity());
    let p = a2.parabolic(&[0]).unwrap();
    assert_eq!((a2.w_p_elements(&p).len(), a2.w_upper_p(&p).len()), (2, 3));
    let b2 = datum("B", 2);
    assert_eq!(b2.w_upper_p(&b2.parabolic(&[0]).unwrap()).len(), 4);
    for t in ["A", "B", "C"] {
        let d = datum(t, 3);
        for p in d.all_parabolics() {
            assert_eq!(d.w_upper_p(&p).len() * d.w_p_elements(&p).len(), d.weyl_group().len());
        }
    }
}

#[test]
fn affine_lengths_and_cosets() {
    let a1 = datum("A", 1);
    let s1 = a1.simple_reflection(0);
    assert_eq!(a1.affine_length(&a1.translation(vec![0])), 0);
    assert_eq!(a1.affine_length(&a1.translation(vec![-1])), 2);
    assert_eq!(a1.affine_length(&a1.affine(s1.clone(), vec![-1])), 1);
    assert!(a1.is_waf_minus(&a1.translation(vec![0])));
    assert!(!a1.is_waf_minus(&a1.affine(s1, vec![0])));
    assert!(a1.is_waf_minus(&a1.translation(vec![-1])));
    for (t, r) in [("A", 1), ("A", 2), ("B", 2), ("G", 2)] {
        let d = datum(t, r);
        for (x, len) in d.affine_bfs(8) {
            assert_eq!(d.affine_length(&x), len, "{t}{r} {x:?}");
        }
        // wt_λ ↦ w(λ) is a bijection W_af^- → Q^∨
        for a in -2..=2 {
            for b in -2..=2 {
                let mu: Vec<i64> = if r == 1 { vec![a] } else { vec![a, b] };
                let hits = d.waf_minus_preimages(&mu).into_iter().filter(|x| d.is_waf_minus(x)).count();
                assert_eq!(hits, 1, "{t}{r} {mu:?}");
            }
        }
    }
}

#[test]
fn parabolic_affine_membership() {
    let a2 = datum("A", 2);
    let p = a2.parabolic(&[0]).unwrap();
    assert!(!a2.in_wp_af(&a2.translation(vec![0, -1]), &p));
    assert!(!a2.in_wp_af(&a2.translation(vec![-1, 0]), &p));
    for (x, _) in a2.waf_minus_elements(6) {
        assert!(a2.in_wp_af(&x, &a2.borel()));
    }
}

#[test]
fn cone_membership_examples() {
    let a1 = datum("A", 1);
    assert_eq!(cone_membership_equiv(&a1, &a1.borel(), &[1], &[vec![0]]).unwrap(), (false, false));
    let a2 = datum("A", 2);
    let p = a2.parabolic(&[0]).unwrap();
    // w_Pw_0(α_1^∨ + α_2^∨) = −α_1^∨
    assert_eq!(cone_membership_equiv(&a2, &p, &[1, 1], &[vec![-1, -1]]).unwrap(), (true, true));
    assert_eq!(cone_membership_equiv(&a2, &p, &[1, 1], &[vec![-1, 0]]).unwrap(), (false, false));
}

#[test]
fn chevalley_brackets() {
    let a1 = ChevalleyAlgebra::new(&datum("A", 1));
    assert_eq!(a1.bracket_basis(0, 1), vec![(2, 1)]);
    assert_eq!(a1.bracket_basis(2, 0), vec![(0, 2)]);
    assert_eq!(a1.bracket_basis(2, 1), vec![(1, -2)]);
    let a2 = ChevalleyAlgebra::new(&datum("A", 2));
    assert_eq!(a2.structure_constant(0, 1), 1);
    let g2 = ChevalleyAlgebra::new(&datum("G", 2));
    let mut seen = std::collections::BTreeSet::new();
    for a in 0..g2.num_roots() {
        for b in 0..g2.num_roots() {
            if g2.root_sum(a, b).is_some() {
                seen.insert(g2.structure_constant(a, b).abs());
            }
        }
    }
    assert_eq!(seen.into_iter().collect::<Vec<_>>(), vec![1, 2, 3]);
}

#[test]
fn regular_element() {
    let a1 = ChevalleyAlgebra::new(&datum("A", 1));
    let r = PolyRing::new(["h"]).unwrap();
    let h = r.var("h");
    assert_eq!(a1.build_et(1, Some(std::slice::from_ref(&h))), vec![r.one(), r.zero(), h]);
    assert_eq!(a1.build_et(0, None), vec![Poly::one(0), Poly::zero(0), Poly::zero(0)]);
    let a2 = ChevalleyAlgebra::new(&datum("A", 2));
    let r2 = PolyRing::new(["h_1", "h_2"]).unwrap();
    let et = a2.build_et(2, Some(&[r2.var("h_1"), r2.var("h_2")]));
    assert_eq!(&et[0..2], &[r2.one(), r2.one()]);
    assert!(et[2..6].iter().all(Poly::is_zero));
    assert_eq!(&et[6..], &[r2.var("h_1"), r2.var("h_2")]);
}

#[test]
fn root_exponentials() {
    let a1 = ChevalleyAlgebra::new(&datum("A", 1));
    assert!(a1.exp_root(0, &Poly::zero(0)).is_identity());
    let r = PolyRing::new(["x", "y"]).unwrap();
    let (x, y) = (r.var("x"), r.var("y"));
    let g = a1.exp_root(0, &x);
    // basis (e, f, H): f ↦ f + xH − x²e, H ↦ H − 2xe
    assert_eq!(g.matrix.column(1), vec![r.parse("-x^2").unwrap(), r.one(), x.clone()]);
    assert_eq!(g.matrix.column(2), vec![r.parse("-2*x").unwrap(), r.zero(), r.one()]);
    assert_eq!(g.matrix.column(0), vec![r.one(), r.zero(), r.zero()]);
    let a2 = ChevalleyAlgebra::new(&datum("A", 2));
    let lhs = a2.exp_root(0, &x).mul(&a2.exp_root(0, &y));
    assert_eq!(lhs.matrix, a2.exp_root(0, &(&x + &y)).matrix);
}

#[test]
fn torus_elements() {
    let a1 = ChevalleyAlgebra::new(&datum("A", 1));
    assert!(a1.torus_element(&[Poly::one(0)], &[Poly::one(0)]).is_identity());
    let r = PolyRing::new(["t", "u"]).unwrap();
    let g = a1.torus_element(&[r.var("t")], &[r.var("u")]);
    assert_eq!(g.matrix.get(0, 0), &r.var("t"));
    assert_eq!(g.matrix.get(1, 1), &r.var("u"));
    let m = a1.torus_element(&[Poly::from_int(0, -1)], &[Poly::from_int(0, -1)]);
    assert!(m.mul(&m).is_identity());
}

#[test]
fn weyl_representatives() {
    let a2 = ChevalleyAlgebra::new(&datum("A", 2));
    assert!(a2.weyl_rep(&a2.datum.weyl_identity(), 0).is_identity());
    for d in RootDatum::all_types_up_to(3) {
        let alg = ChevalleyAlgebra::new(&d);
        for i in 0..d.rank {
            assert!(alg.simple_square_is_sign(i), "{} i={i}", d.name());
        }
        let w0 = alg.weyl_rep(&d.longest_element(), 0);
        assert!(w0.mul(&w0).is_identity(), "{}", d.name());
        assert!(alg.check_parabolic_sign(&d.parabolic(&[]).unwrap()).iter().all(|x| x.1));
    }
    for t in ["A", "B"] {
        let d = datum(t, 2);
        let alg = ChevalleyAlgebra::new(&d);
        assert_eq!(alg.check_parabolic_sign(&d.parabolic(&[0]).unwrap()), vec![(1, true)]);
    }
}

#[test]
fn presentation_shapes() {
    let a2 = datum("A", 2);
    let pres = build_yp(&a2, &a2.borel(), true).unwrap();
    let ring = pres.ring();
    let quantum: Vec<usize> = ["q_1", "q_2"].iter().map(|n| ring.index_of(n).unwrap()).collect();
    let vanishing = pres.ideal.generators.iter().filter(|g| quantum.iter().all(|&v| !g.uses_var(v))).count();
    assert_eq!((vanishing, pres.ideal.generators.len() - vanishing), (1, 2));
    for (t, r) in [("A", 2), ("B", 2), ("G", 2), ("A", 3)] {
        let d = datum(t, r);
        for p in d.proper_parabolics() {
            let pres = build_yp(&d, &p, true).unwrap();
            assert_eq!(pres.cell_count(), d.num_positive() - p.r_p_plus.len());
            assert_eq!(cell_roots(&d, &p).len(), pres.cell_count());
        }
    }
}

#[test]
fn star_presentation_rank_bound() {
    let a2 = datum("A", 2);
    let star = build_yp_star(&a2, &a2.borel(), true).unwrap();
    let values = [("h_1", q(3, 7)), ("h_2", q(-2, 5)), ("q_1", q(5, 3)), ("q_2", q(-1, 2))];
    let dim = star.ideal.specialize(&values).unwrap().quotient_dimension(DEFAULT_BUDGET).unwrap();
    let n = dim.finite().expect("finite after specialization");
    assert!(n <= 6, "{n}");
    let yp = build_yp(&a2, &a2.borel(), true).unwrap();
    let full = yp.ideal.specialize(&values).unwrap().quotient_dimension(DEFAULT_BUDGET).unwrap();
    assert_eq!(full.finite(), Some(6));
}

#[test]
fn identity_centralizes() {
    for (t, r) in [("A", 1), ("A", 2), ("B", 2)] {
        let d = datum(t, r);
        let pres = build_centralizer(&d, true).unwrap();
        let ring = pres.ring();
        let vals: Vec<Option<Poly>> = ring
            .names()
            .map(|n| match n.chars().next() {
                Some('z') => Some(ring.one()),
                Some('y') => Some(ring.zero()),
                _ => None,
            })
            .collect();
        for g in &pres.ideal.generators {
            assert!(g.substitute(&vals).is_zero(), "{t}{r}: {}", ring.format(g));
        }
    }
}

#[test]
fn qloc_without_equivariance() {
    let a1 = datum("A", 1);
    let res = qloc(&a1, &a1.borel(), false).unwrap();
    let ring = res.centralizer.ring().clone();
    let basis = res.centralizer.ideal.groebner(DEFAULT_BUDGET).unwrap();
    let y = RationalFunction::from_poly(ring.var("y_1"));
    assert!(rational_equal_mod(&basis, &res.values[0], &y.powi(-2)));
}

#[test]
fn levi_qbar_and_redundancy_examples() {
    for t in ["A", "B"] {
        let d = datum(t, 2);
        let pres = build_yp(&d, &d.parabolic(&[0]).unwrap(), true).unwrap();
        assert_eq!(levi_qbar_is_one(&pres, DEFAULT_BUDGET).unwrap(), vec![(1, true)]);
    }
    let b2 = datum("B", 2);
    assert!(redundancy_check(&b2, &b2.parabolic(&[1]).unwrap()).unwrap());
    let a2 = datum("A", 2);
    assert!(redundancy_check(&a2, &a2.borel()).unwrap());
}

#[test]
fn pls_examples() {
    for (t, r) in [("A", 1), ("A", 2), ("B", 2)] {
        let d = datum(t, r);
        for p in d.all_parabolics() {
            let e = d.translation(vec![0; r]);
            assert_eq!(
                phi_pls(&d, &e, &p).unwrap(),
                PLSImage::Term { eta: vec![0; p.excluded.len()], schubert: d.weyl_identity() }
            );
            assert!(pls_degree_check(&d, &e, &p).unwrap());
            assert!(translation_product_check(&d, &vec![0; r], &vec![0; r], &p).unwrap());
        }
    }
    let a1 = datum("A", 1);
    let b = a1.borel();
    let t = a1.translation(vec![-1]);
    assert_eq!(phi_pls(&a1, &t, &b).unwrap(), PLSImage::Term { eta: vec![-1], schubert: a1.weyl_identity() });
    assert!(pls_degree_check(&a1, &t, &b).unwrap());
    assert!(pls_degree_check(&a1, &a1.affine(a1.simple_reflection(0), vec![-1]), &b).unwrap());
    assert!(translation_product_check(&a1, &[-1], &[-1], &b).unwrap());
    // t_{−α_2^∨} is not in W_af^- for A_2, so the map rejects it
    let a2 = datum("A", 2);
    assert!(phi_pls(&a2, &a2.translation(vec![0, -1]), &a2.parabolic(&[0]).unwrap()).is_err());
    assert!(translation_product_check(&a2, &[-1, 0], &[0, -1], &a2.borel()).is_err());
}
