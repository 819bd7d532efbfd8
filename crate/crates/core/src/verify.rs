//! Verification suites: each returns one [`Check`] per verified statement,
//! so the CLI and the acceptance tests can report them uniformly.

use std::fmt;
use std::str::FromStr;

use polyalg::{IdealPresentation, MonomialOrder, Poly, QuotientDimension, RationalFunction, Q};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::peterson::{
    build_yp, fiber_analysis, generic_rank, homogeneity_check, levi_qbar_is_one, qloc, quantum_weight,
    rational_equal_mod, redundancy_check, redundant_components, SchemePresentation,
};
use crate::pls::{phi_pls, pls_degree_check, rank_one_verify, translation_product_check, PLSImage};
use crate::rootdata::{cone_membership_corrected, cone_membership_equiv, inverse_cartan_nonnegative};
use crate::rootdata::{ParabolicData, RootDatum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    GoldenSl2,
    Homogeneity,
    LeviQbar,
    Fiber,
    Rank,
    Redundancy,
    WeylSigns,
    Cartan,
    Pls,
    Engine,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::GoldenSl2,
        Suite::Homogeneity,
        Suite::LeviQbar,
        Suite::Fiber,
        Suite::Rank,
        Suite::Redundancy,
        Suite::WeylSigns,
        Suite::Cartan,
        Suite::Pls,
        Suite::Engine,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::GoldenSl2 => "golden-sl2",
            Suite::Homogeneity => "homogeneity",
            Suite::LeviQbar => "levi-qbar",
            Suite::Fiber => "fiber",
            Suite::Rank => "rank",
            Suite::Redundancy => "redundancy",
            Suite::WeylSigns => "weyl-signs",
            Suite::Cartan => "cartan",
            Suite::Pls => "pls",
            Suite::Engine => "engine",
        }
    }

    /// Whether the suite runs over the configured (type, parabolic) cases.
    pub fn per_case(self) -> bool {
        matches!(self, Suite::Homogeneity | Suite::LeviQbar | Suite::Fiber | Suite::Rank | Suite::Redundancy)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.id() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = Suite::ALL.iter().map(|x| x.id()).collect();
                Error::Config(format!("unknown suite {s:?}; expected one of {}", known.join(", ")))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    /// Type and parabolic the check ran on, or "" for suite-wide checks.
    pub case: String,
    /// The statement being checked.
    pub anchor: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct Case {
    pub datum: RootDatum,
    pub parabolic: ParabolicData,
}

impl Case {
    pub fn new(lie_type: &str, rank: usize, excluded: &[usize]) -> Result<Self> {
        let datum = RootDatum::parse(lie_type, rank)?;
        let parabolic = datum.parabolic(excluded)?;
        Ok(Case { datum, parabolic })
    }

    pub fn label(&self) -> String {
        case_label(&self.datum, &self.parabolic)
    }

    pub fn expected_rank(&self) -> usize {
        self.datum.w_upper_p(&self.parabolic).len()
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub cases: Vec<Case>,
    pub seeds: Vec<u64>,
    pub budget: usize,
    /// Adds G_2 and rank-3 cases where a suite supports them.
    pub extended: bool,
}

impl VerifyConfig {
    /// A_1, A_2 and B_2 with the Borel and every maximal parabolic.
    pub fn standard(budget: usize) -> Self {
        let cases = default_cases().expect("built-in cases are valid");
        VerifyConfig { cases, seeds: vec![1, 2, 3], budget, extended: false }
    }
}

pub fn default_cases() -> Result<Vec<Case>> {
    let table: [(&str, usize, &[usize]); 7] = [
        ("A", 1, &[0]),
        ("A", 2, &[0, 1]),
        ("A", 2, &[0]),
        ("A", 2, &[1]),
        ("B", 2, &[0, 1]),
        ("B", 2, &[0]),
        ("B", 2, &[1]),
    ];
    table.iter().map(|(t, r, ex)| Case::new(t, *r, ex)).collect()
}

fn extended_cases() -> Result<Vec<Case>> {
    let table: [(&str, usize, &[usize]); 5] =
        [("G", 2, &[0]), ("G", 2, &[1]), ("A", 3, &[0]), ("B", 3, &[2]), ("C", 3, &[2])];
    table.iter().map(|(t, r, ex)| Case::new(t, *r, ex)).collect()
}

/// "A2 excluded={1}", indices 1-based.
pub fn case_label(d: &RootDatum, p: &ParabolicData) -> String {
    format!("{} excluded={{{}}}", d.name(), p.label())
}

struct Out {
    suite: Suite,
    checks: Vec<Check>,
}

impl Out {
    fn new(suite: Suite) -> Self {
        Out { suite, checks: Vec::new() }
    }

    fn push(&mut self, case: impl Into<String>, anchor: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            suite: self.suite,
            case: case.into(),
            anchor: anchor.into(),
            passed,
            detail: detail.into(),
        });
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut out = Out::new(suite);
    let mut cases = cfg.cases.clone();
    if cfg.extended && suite.per_case() {
        cases.extend(extended_cases()?);
    }
    match suite {
        Suite::GoldenSl2 => golden_sl2(&mut out)?,
        Suite::Homogeneity => {
            for c in &cases {
                homogeneity(&mut out, c)?;
            }
        }
        Suite::LeviQbar => {
            for c in &cases {
                let pres = build_yp(&c.datum, &c.parabolic, true)?;
                let res = levi_qbar_is_one(&pres, cfg.budget)?;
                let failed: Vec<usize> = res.iter().filter(|r| !r.1).map(|r| r.0 + 1).collect();
                let detail = if res.is_empty() {
                    "no Levi indices".to_string()
                } else {
                    format!("Levi indices {:?}, failing {failed:?}", res.iter().map(|r| r.0 + 1).collect::<Vec<_>>())
                };
                out.push(c.label(), "qbar_i = 1 on the Levi indices", failed.is_empty(), detail);
            }
        }
        Suite::Fiber => {
            for c in &cases {
                let pres = build_yp(&c.datum, &c.parabolic, true)?;
                let (dim, nil) = fiber_analysis(&pres, cfg.budget)?;
                let want = c.expected_rank();
                out.push(
                    c.label(),
                    "fiber over h = q = 0 has length |W/W_P| and is supported at the origin",
                    dim == want && nil,
                    format!("length {dim} (expected {want}), cell coordinates nilpotent: {nil}"),
                );
            }
        }
        Suite::Rank => {
            for c in &cases {
                let pres = build_yp(&c.datum, &c.parabolic, true)?;
                let want = c.expected_rank();
                match generic_rank(&pres, &cfg.seeds, cfg.budget) {
                    Ok(r) => out.push(
                        c.label(),
                        "generic rank equals |W/W_P|",
                        r.rank() == want,
                        format!(
                            "seeds {:?} gave {:?}; symbolic {}; expected {want}",
                            r.seeds,
                            r.specialized,
                            r.symbolic.map_or("skipped (budget)".to_string(), |s| s.to_string())
                        ),
                    ),
                    Err(Error::Structural(msg)) => out.push(c.label(), "generic rank equals |W/W_P|", false, msg),
                    Err(e) => return Err(e),
                }
            }
        }
        Suite::Redundancy => {
            let mut all = cases.clone();
            if !cfg.extended {
                // rank two leaves −w_0R_P⁺ simple, so add rank-three parabolics
                for t in ["A", "B", "C"] {
                    for ex in [&[0usize][..], &[1], &[2]] {
                        all.push(Case::new(t, 3, ex)?);
                    }
                }
            }
            for c in &all {
                redundancy(&mut out, c)?;
            }
        }
        Suite::WeylSigns => weyl_signs(&mut out)?,
        Suite::Cartan => cartan(&mut out)?,
        Suite::Pls => pls(&mut out)?,
        Suite::Engine => engine(&mut out, cfg)?,
    }
    Ok(out.checks)
}

fn golden_sl2(out: &mut Out) -> Result<()> {
    let a1 = RootDatum::parse("A", 1)?;
    let b = a1.borel();
    let label = case_label(&a1, &b);
    let case = label.as_str();
    let pres = build_yp(&a1, &b, true)?;
    let ring = pres.ring();
    let want = ring.parse("x_1^2 + 2*h_1*x_1")?;
    out.push(
        case,
        "qbar = y^2 + 2hy on the big cell",
        pres.qbar[0] == want,
        format!("qbar = {}", ring.format(&pres.qbar[0])),
    );
    let res = qloc(&a1, &b, true)?;
    let cring = res.centralizer.ring().clone();
    let basis = res.centralizer.ideal.groebner(polyalg::DEFAULT_BUDGET)?;
    let y = RationalFunction::from_poly(cring.var("y_1"));
    let h = RationalFunction::from_poly(cring.var("h_1"));
    let two = RationalFunction::from_poly(Poly::from_int(cring.nvars(), 2));
    let target = &y.powi(-2) - &(&(&two * &h) * &y.recip());
    out.push(
        case,
        "qbar_loc = y^-2 - 2h y^-1 on the centralizer",
        rational_equal_mod(&basis, &res.values[0], &target),
        format!(
            "qbar_loc = ({}) / ({})",
            cring.format(res.values[0].numerator()),
            cring.format(res.values[0].denominator())
        ),
    );
    for c in rank_one_verify()? {
        out.push(case, c.name, c.passed, c.detail);
    }
    Ok(())
}

fn homogeneity(out: &mut Out, c: &Case) -> Result<()> {
    let pres = build_yp(&c.datum, &c.parabolic, true)?;
    let (gens, qbar) = homogeneity_check(&pres);
    out.push(c.label(), "every generator is weighted-homogeneous", gens, format!("{} generators", pres.ideal.generators.len()));
    let formula: Vec<i64> = c.parabolic.excluded.iter().map(|&i| quantum_weight(&c.datum, &c.parabolic, i)).collect();
    let stated = direct_quantum_weights(&c.datum, &c.parabolic);
    out.push(
        c.label(),
        "wt(qbar_i) = 2 sum over R+ minus R_P+ of alpha(alpha_i^vee)",
        qbar && formula == stated,
        format!("weights {formula:?}, recomputed {stated:?}"),
    );
    Ok(())
}

/// 2Σ_{α∈R⁺∖R_P⁺} α(α_i^∨) summed root by root.
fn direct_quantum_weights(d: &RootDatum, p: &ParabolicData) -> Vec<i64> {
    p.excluded
        .iter()
        .map(|&i| {
            let coroot = d.coroot(d.simple_root_index(i));
            (0..d.num_positive())
                .filter(|k| !p.r_p_plus.contains(k))
                .map(|k| 2 * d.pair(&d.root(k), &coroot))
                .sum()
        })
        .collect()
}

fn redundancy(out: &mut Out, c: &Case) -> Result<()> {
    let pres = build_yp(&c.datum, &c.parabolic, true)?;
    let comps = redundant_components(&pres);
    let ok = redundancy_check(&c.datum, &c.parabolic)?;
    let detail = if comps.is_empty() {
        "no non-simple coroots in -w_0 R_P+ (vacuous)".to_string()
    } else {
        let labels: Vec<String> = comps.iter().map(|(k, _)| format!("{:?}", c.datum.coroot(*k))).collect();
        format!("components at {} vanish: {ok}", labels.join(", "))
    };
    out.push(c.label(), "non-simple components of M on -w_0 R_P+ vanish", ok, detail);
    Ok(())
}

fn weyl_signs(out: &mut Out) -> Result<()> {
    for (t, r) in [("A", 2), ("B", 2), ("G", 2)] {
        let d = RootDatum::parse(t, r)?;
        let alg = ChevalleyAlgebra::new(&d);
        let name = d.name();
        let w0 = d.longest_element();
        let words = w0.reduced_words().len();
        out.push(
            name.clone(),
            "w_0 representative is independent of the reduced word",
            alg.word_independent(&w0),
            format!("{words} reduced words"),
        );
        let squares: Vec<bool> = (0..r).map(|i| alg.simple_square_is_sign(i)).collect();
        out.push(name.clone(), "s_i^2 = alpha_i(-1)", squares.iter().all(|x| *x), format!("{squares:?}"));
        let w0r = alg.weyl_rep(&w0, 0);
        out.push(name.clone(), "w_0^2 = id", w0r.mul(&w0r).is_identity(), "");
        for p in d.all_parabolics() {
            let label = case_label(&d, &p);
            out.push(label.clone(), "w_P^2 = (sum of R_P+)(-1)", alg.wp_square_is_sign(&p), "");
            let res = alg.check_parabolic_sign(&p);
            let failed: Vec<usize> = res.iter().filter(|x| !x.1).map(|x| x.0 + 1).collect();
            out.push(
                label,
                "w_P w_0 sends e_{-w_0 alpha_i} to e_{-w_P alpha_i} for Levi i",
                failed.is_empty(),
                format!("Levi indices checked: {}, failing {failed:?}", res.len()),
            );
        }
    }
    Ok(())
}

fn cartan(out: &mut Out) -> Result<()> {
    let all = RootDatum::all_types_up_to(8);
    let bad: Vec<String> = all.iter().filter(|d| !inverse_cartan_nonnegative(d)).map(|d| d.name()).collect();
    out.push("", "inverse Cartan matrix is entrywise nonnegative (rank <= 8)", bad.is_empty(), format!("{} types, failing {bad:?}", all.len()));

    let mut bad = Vec::new();
    let mut count = 0;
    for d in RootDatum::all_types_up_to(4) {
        for ell in 0..d.rank {
            let (b, c) = d.decompose_fundamental_coweight(ell)?;
            count += 1;
            if b.iter().chain(&c).any(|x| x < &Q::from_integer(0.into())) || c.is_empty() {
                bad.push(format!("{} l={}", d.name(), ell + 1));
            }
        }
    }
    out.push(
        "",
        "fundamental coweight = nonneg fundamental coweights + nonneg coroots (rank <= 4)",
        bad.is_empty(),
        format!("{count} decompositions, failing {bad:?}"),
    );

    let sweep = cone_sweep()?;
    out.push(
        "",
        "cone membership biconditional, literal form, |mu| <= 2 (rank <= 2)",
        sweep.literal_bad == 0,
        match &sweep.first_counterexample {
            Some(s) => format!("{} instances, {} disagree; first: {s}", sweep.total, sweep.literal_bad),
            None => format!("{} instances", sweep.total),
        },
    );
    out.push(
        "",
        "cone membership biconditional, |mu| = 1",
        sweep.singleton_bad == 0,
        format!("{} singleton instances, {} disagree", sweep.singletons, sweep.singleton_bad),
    );
    out.push(
        "",
        "cone membership with 'all <=, some <' on the right, |mu| <= 2",
        sweep.corrected_bad == 0,
        format!("{} instances, {} disagree", sweep.total, sweep.corrected_bad),
    );
    Ok(())
}

struct ConeSweep {
    total: usize,
    singletons: usize,
    literal_bad: usize,
    singleton_bad: usize,
    corrected_bad: usize,
    first_counterexample: Option<String>,
}

/// Every rank ≤ 2 type and parabolic, dominant λ ≠ 0 with coordinates ≤ 2,
/// and all lists of one or two coweights in conv(W·λ).
fn cone_sweep() -> Result<ConeSweep> {
    let mut s = ConeSweep {
        total: 0,
        singletons: 0,
        literal_bad: 0,
        singleton_bad: 0,
        corrected_bad: 0,
        first_counterexample: None,
    };
    for d in RootDatum::all_types_up_to(2) {
        let lambdas: Vec<Vec<i64>> = coordinate_box(d.rank, 0, 2)
            .into_iter()
            .filter(|l| l.iter().any(|&x| x != 0) && d.is_dominant_coweight(l))
            .collect();
        for p in d.all_parabolics() {
            for lambda in &lambdas {
                let bound = d
                    .weyl_group()
                    .iter()
                    .flat_map(|w| w.act_coweight(lambda))
                    .map(i64::abs)
                    .max()
                    .unwrap_or(0);
                let hull: Vec<Vec<i64>> = coordinate_box(d.rank, -bound, bound)
                    .into_iter()
                    .filter(|mu| d.in_orbit_hull(lambda, mu))
                    .collect();
                for a in 0..hull.len() {
                    for b in a..=hull.len() {
                        let list: Vec<Vec<i64>> =
                            if b == hull.len() { vec![hull[a].clone()] } else { vec![hull[a].clone(), hull[b].clone()] };
                        let (l, r) = cone_membership_equiv(&d, &p, lambda, &list)?;
                        let (l2, r2) = cone_membership_corrected(&d, &p, lambda, &list)?;
                        s.total += 1;
                        if list.len() == 1 {
                            s.singletons += 1;
                            if l != r {
                                s.singleton_bad += 1;
                            }
                        }
                        if l != r {
                            s.literal_bad += 1;
                            if s.first_counterexample.is_none() {
                                s.first_counterexample = Some(format!(
                                    "{} lambda={lambda:?} mu={list:?} lhs={l} rhs={r}",
                                    case_label(&d, &p)
                                ));
                            }
                        }
                        if l2 != r2 {
                            s.corrected_bad += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(s)
}

fn coordinate_box(rank: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (lo..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

const PLS_MAX_LEN: usize = 8;

fn pls(out: &mut Out) -> Result<()> {
    for (t, r) in [("A", 1), ("A", 2), ("B", 2)] {
        let d = RootDatum::parse(t, r)?;
        let elements = d.waf_minus_elements(PLS_MAX_LEN);
        for p in d.all_parabolics() {
            let label = case_label(&d, &p);
            let (mut nonzero, mut bad_member, mut bad_degree) = (0, Vec::new(), Vec::new());
            for (x, _) in &elements {
                match phi_pls(&d, x, &p)? {
                    PLSImage::Zero => {}
                    PLSImage::Term { schubert, .. } => {
                        nonzero += 1;
                        if !d.is_in_w_upper_p(&schubert, &p) {
                            bad_member.push(format!("{x:?}"));
                        }
                    }
                }
                if !pls_degree_check(&d, x, &p)? {
                    bad_degree.push(format!("{x:?}"));
                }
            }
            out.push(
                label.clone(),
                "Schubert part of every nonzero image lies in W^P",
                bad_member.is_empty(),
                format!("{} elements of length <= {PLS_MAX_LEN}, {nonzero} nonzero; failing {bad_member:?}", elements.len()),
            );
            out.push(
                label.clone(),
                "deg(q^eta sigma_w) = -2 l(x)",
                bad_degree.is_empty(),
                format!("{} elements; failing {bad_degree:?}", elements.len()),
            );

            let (mut tested, mut bad) = (0, Vec::new());
            let box3 = coordinate_box(r, -3, 0);
            for mu1 in &box3 {
                for mu2 in &box3 {
                    match translation_product_check(&d, mu1, mu2, &p) {
                        Ok(true) => tested += 1,
                        Ok(false) => {
                            tested += 1;
                            bad.push(format!("{mu1:?}+{mu2:?}"));
                        }
                        Err(Error::Precondition(_)) => {}
                        Err(e) => return Err(e),
                    }
                }
            }
            out.push(
                label,
                "translation images multiply additively",
                bad.is_empty() && tested > 0,
                format!("{tested} antidominant pairs with coordinates >= -3; failing {bad:?}"),
            );
        }
    }
    Ok(())
}

fn random_q(rng: &mut ChaCha8Rng) -> Q {
    let mut num = 0i64;
    while num == 0 {
        num = rng.gen_range(-9..=9);
    }
    Q::new(num.into(), rng.gen_range(1i64..=5).into())
}

fn unit_vec(dim: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::from_integer(0.into()); dim];
    v[i] = Q::from_integer(1.into());
    v
}

fn add3(a: &[Q], b: &[Q], c: &[Q]) -> Vec<Q> {
    a.iter().zip(b).zip(c).map(|((x, y), z)| x + y + z).collect()
}

fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(|x| x == &Q::from_integer(0.into()))
}

/// (antisymmetry failures, Jacobi failures) over the given triples.
fn axiom_failures(alg: &ChevalleyAlgebra, triples: &[(Vec<Q>, Vec<Q>, Vec<Q>)]) -> (usize, usize) {
    let (mut anti, mut jac) = (0, 0);
    for (x, y, z) in triples {
        let xy = alg.bracket(x, y);
        let yx = alg.bracket(y, x);
        if !is_zero_vec(&xy.iter().zip(&yx).map(|(a, b)| a + b).collect::<Vec<_>>()) {
            anti += 1;
        }
        let t1 = alg.bracket(x, &alg.bracket(y, z));
        let t2 = alg.bracket(y, &alg.bracket(z, x));
        let t3 = alg.bracket(z, &xy);
        if !is_zero_vec(&add3(&t1, &t2, &t3)) {
            jac += 1;
        }
    }
    (anti, jac)
}

/// [e_β, e_{−β}] = H_β and [H_β, e_β] = 2e_β for every root β.
fn pairing_failures(alg: &ChevalleyAlgebra) -> usize {
    let d = &alg.datum;
    let dim = alg.dim();
    (0..alg.num_roots())
        .filter(|&a| {
            let h = alg.bracket(&unit_vec(dim, a), &unit_vec(dim, d.negate_index(a)));
            let mut expected = vec![Q::from_integer(0.into()); dim];
            for (i, c) in d.root(a).iter().enumerate() {
                expected[alg.cartan_index(i)] = Q::from_integer((*c).into());
            }
            let he = alg.bracket(&h, &unit_vec(dim, a));
            let two_e: Vec<Q> = unit_vec(dim, a).iter().map(|x| x * Q::from_integer(2.into())).collect();
            h != expected || he != two_e
        })
        .count()
}

fn engine(out: &mut Out, cfg: &VerifyConfig) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seeds.first().copied().unwrap_or(0));
    for (t, r) in [("A", 1), ("A", 2), ("B", 2), ("G", 2)] {
        let d = RootDatum::parse(t, r)?;
        let alg = ChevalleyAlgebra::new(&d);
        let dim = alg.dim();
        let mut triples = Vec::with_capacity(dim * dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    triples.push((unit_vec(dim, a), unit_vec(dim, b), unit_vec(dim, c)));
                }
            }
        }
        let (anti, jac) = axiom_failures(&alg, &triples);
        let pairing = pairing_failures(&alg);
        out.push(
            d.name(),
            "Chevalley basis: antisymmetry, Jacobi, pairing normalization (all basis triples)",
            anti + jac + pairing == 0,
            format!("{} triples; failures: antisymmetry {anti}, Jacobi {jac}, pairing {pairing}", triples.len()),
        );
    }
    for (t, r) in [("G", 2), ("A", 3)] {
        let d = RootDatum::parse(t, r)?;
        let alg = ChevalleyAlgebra::new(&d);
        let dim = alg.dim();
        let random_vec = |rng: &mut ChaCha8Rng| -> Vec<Q> {
            (0..dim).map(|_| if rng.gen_bool(0.4) { random_q(rng) } else { Q::from_integer(0.into()) }).collect()
        };
        let triples: Vec<_> =
            (0..1000).map(|_| (random_vec(&mut rng), random_vec(&mut rng), random_vec(&mut rng))).collect();
        let (anti, jac) = axiom_failures(&alg, &triples);
        let pairing = pairing_failures(&alg);
        out.push(
            d.name(),
            "Chevalley basis: antisymmetry, Jacobi on random triples, pairing normalization",
            anti + jac + pairing == 0,
            format!("1000 random triples; failures: antisymmetry {anti}, Jacobi {jac}, pairing {pairing}"),
        );
    }

    for (t, r) in [("A", 2), ("B", 2), ("G", 2)] {
        let d = RootDatum::parse(t, r)?;
        let alg = ChevalleyAlgebra::new(&d);
        let dim = alg.dim();
        let mut all_pairs: Vec<(usize, usize)> = (0..dim).flat_map(|a| (0..dim).map(move |b| (a, b))).collect();
        let mut elements = Vec::new();
        for k in 0..alg.num_roots() {
            elements.push(alg.exp_root(k, &Poly::constant(0, random_q(&mut rng))));
        }
        for i in 0..r {
            elements.push(alg.simple_rep(i, 0));
        }
        elements.push(alg.weyl_rep(&d.longest_element(), 0));
        let mut failed = 0;
        for g in &elements {
            all_pairs.shuffle(&mut rng);
            if !alg.preserves_bracket(g, &all_pairs[..20.min(all_pairs.len())]) {
                failed += 1;
            }
        }
        out.push(
            d.name(),
            "generated group elements preserve the bracket",
            failed == 0,
            format!("{} elements x 20 random basis pairs; {failed} failing", elements.len()),
        );
    }

    let mut ideals: Vec<(String, IdealPresentation)> = Vec::new();
    for c in &cfg.cases {
        let pres = build_yp(&c.datum, &c.parabolic, true)?;
        ideals.push((format!("{} specialized", c.label()), specialize_random(&pres, cfg.seeds.first().copied().unwrap_or(1))?));
        let zero: Vec<(String, Q)> = pres.parameter_names().into_iter().map(|n| (n, Q::from_integer(0.into()))).collect();
        let zero: Vec<(&str, Q)> = zero.iter().map(|(n, v)| (n.as_str(), v.clone())).collect();
        ideals.push((format!("{} fiber", c.label()), pres.ideal.specialize(&zero)?));
    }
    let mut nondet = Vec::new();
    let mut order_dep = Vec::new();
    for (label, ideal) in &ideals {
        let g1 = ideal.groebner_with(MonomialOrder::Grevlex, cfg.budget)?;
        let g2 = ideal.clone().groebner_with(MonomialOrder::Grevlex, cfg.budget)?;
        if g1.basis.polys() != g2.basis.polys() {
            nondet.push(label.clone());
        }
        let n = ideal.ring.nvars();
        let dims: Vec<QuotientDimension> = [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Block { first: n / 2 }]
            .into_iter()
            .map(|o| ideal.with_order(o).quotient_dimension(cfg.budget))
            .collect::<std::result::Result<_, _>>()?;
        if dims.iter().any(|x| *x != dims[0]) {
            order_dep.push(format!("{label}: {dims:?}"));
        }
    }
    out.push("", "Groebner bases are deterministic", nondet.is_empty(), format!("{} ideals; differing {nondet:?}", ideals.len()));
    out.push(
        "",
        "quotient dimension is independent of the monomial order",
        order_dep.is_empty(),
        format!("{} ideals under grevlex, lex, block; differing {order_dep:?}", ideals.len()),
    );
    Ok(())
}

fn specialize_random(pres: &SchemePresentation, seed: u64) -> Result<IdealPresentation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names = pres.parameter_names();
    let assignment: Vec<(&str, Q)> = names.iter().map(|n| (n.as_str(), random_q(&mut rng))).collect();
    Ok(pres.ideal.specialize(&assignment)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_ids_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.id().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn coordinate_box_size() {
        assert_eq!(coordinate_box(2, -1, 1).len(), 9);
    }
}
