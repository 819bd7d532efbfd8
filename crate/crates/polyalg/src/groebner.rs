//! Buchberger's algorithm with the Gebauer–Möller pair criteria.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::error::{BudgetStats, PolyError};
use crate::ideal::QuotientDimension;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Poly, Q};

/// Default cap on the number of S-pair reductions per Gröbner computation.
pub const DEFAULT_BUDGET: usize = 200_000;

/// Polynomial as a list of terms in strictly decreasing monomial order.
#[derive(Clone, Debug)]
struct Sorted {
    terms: Vec<(Monomial, Q)>,
}

impl Sorted {
    fn from_poly(p: &Poly, order: MonomialOrder) -> Self {
        Sorted { terms: p.sorted_terms(order) }
    }

    fn to_poly(&self, nvars: usize) -> Poly {
        Poly::from_terms(nvars, self.terms.iter().cloned())
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.first() {
            if !lc.is_one() {
                let inv = lc.recip();
                for (_, c) in &mut self.terms {
                    *c *= &inv;
                }
            }
        }
    }

    /// `self - c * m * g`, where `g` is sorted for the same order.
    fn sub_scaled(&self, c: &Q, m: &Monomial, g: &Sorted, order: MonomialOrder) -> Sorted {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some((am, _)), Some((bm, _))) => order.cmp(am, bm),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let (bm, bc) = b.next().unwrap();
                    out.push((bm, -bc));
                }
                Ordering::Equal => {
                    let (am, ac) = a.next().unwrap();
                    let (_, bc) = b.next().unwrap();
                    let c = ac - bc;
                    if !c.is_zero() {
                        out.push((am.clone(), c));
                    }
                }
            }
        }
        Sorted { terms: out }
    }
}

/// Fully reduces `f` modulo `basis` (all polynomials monic).
fn reduce(f: Sorted, basis: &[Sorted], order: MonomialOrder) -> Sorted {
    let mut rest = f;
    let mut done: Vec<(Monomial, Q)> = Vec::new();
    while !rest.is_zero() {
        let (lm, lc) = rest.terms[0].clone();
        match basis.iter().find(|g| g.lm().divides(&lm)) {
            Some(g) => {
                let m = g.lm().quotient_of(&lm);
                rest = rest.sub_scaled(&lc, &m, g, order);
            }
            None => {
                done.push((lm, lc));
                rest.terms.remove(0);
            }
        }
    }
    Sorted { terms: done }
}

fn s_polynomial(f: &Sorted, g: &Sorted, order: MonomialOrder) -> Sorted {
    let l = f.lm().lcm(g.lm());
    let mf = f.lm().quotient_of(&l);
    let mg = g.lm().quotient_of(&l);
    let zero = Sorted { terms: Vec::new() };
    let fm = zero.sub_scaled(&-Q::one(), &mf, f, order);
    fm.sub_scaled(&Q::one(), &mg, g, order)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Builder {
    order: MonomialOrder,
    polys: Vec<Sorted>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Builder {
    fn insert(&mut self, h: Sorted) {
        let t = self.polys.len();
        let lh = h.lm().clone();

        let mut candidates: Vec<usize> = (0..t).filter(|&g| self.active[g]).collect();
        let mut kept: Vec<usize> = Vec::new();
        while let Some(g1) = candidates.pop() {
            let l1 = lh.lcm(self.polys[g1].lm());
            let dominated = candidates
                .iter()
                .chain(kept.iter())
                .any(|&g2| lh.lcm(self.polys[g2].lm()).divides(&l1));
            if lh.is_coprime(self.polys[g1].lm()) || !dominated {
                kept.push(g1);
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|&g| !lh.is_coprime(self.polys[g].lm()))
            .map(|g| Pair { i: g, j: t, lcm: lh.lcm(self.polys[g].lm()) })
            .collect();

        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && lh.lcm(polys[p.i].lm()) != p.lcm
                && lh.lcm(polys[p.j].lm()) != p.lcm)
        });
        self.pairs.extend(new_pairs);

        for g in 0..t {
            if self.active[g] && lh.divides(self.polys[g].lm()) {
                self.active[g] = false;
            }
        }
        self.polys.push(h);
        self.active.push(true);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }
}

/// A reduced Gröbner basis together with its monomial order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    basis: Vec<Sorted>,
    pairs_reduced: usize,
}

/// Computes the reduced Gröbner basis of the ideal generated by `generators`.
/// Fails with [`PolyError::BudgetExceeded`] once more than `budget` S-pairs
/// have been reduced.
pub fn groebner_basis(
    generators: &[Poly],
    nvars: usize,
    order: MonomialOrder,
    budget: usize,
) -> Result<GroebnerBasis, PolyError> {
    for g in generators {
        if g.nvars() != nvars {
            return Err(PolyError::RingMismatch { expected: nvars, found: g.nvars() });
        }
    }
    let mut b = Builder { order, polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    let unit = |pairs_reduced| GroebnerBasis {
        nvars,
        order,
        basis: vec![Sorted::from_poly(&Poly::one(nvars), order)],
        pairs_reduced,
    };

    let mut inputs: Vec<Sorted> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Sorted::from_poly(g, order))
        .collect();
    // smallest leading monomials first keeps early reductions cheap
    inputs.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for f in inputs {
        let mut h = reduce(f, &b.polys, order);
        if h.is_zero() {
            continue;
        }
        if h.lm().is_one() {
            return Ok(unit(0));
        }
        h.make_monic();
        b.insert(h);
    }

    let mut reduced = 0usize;
    while let Some(pair) = b.next_pair() {
        if reduced >= budget {
            return Err(PolyError::BudgetExceeded {
                budget,
                stats: BudgetStats {
                    pairs_reduced: reduced,
                    pairs_pending: b.pairs.len() + 1,
                    basis_size: b.active.iter().filter(|a| **a).count(),
                },
            });
        }
        reduced += 1;
        let s = s_polynomial(&b.polys[pair.i], &b.polys[pair.j], order);
        let mut h = reduce(s, &b.polys, order);
        if h.is_zero() {
            continue;
        }
        if h.lm().is_one() {
            return Ok(unit(reduced));
        }
        h.make_monic();
        b.insert(h);
    }

    // minimal basis, then inter-reduce
    let mut minimal: Vec<Sorted> = Vec::new();
    for (k, p) in b.polys.iter().enumerate() {
        if !b.active[k] {
            continue;
        }
        let redundant = b.polys.iter().enumerate().any(|(l, q)| {
            b.active[l] && l != k && q.lm().divides(p.lm()) && (q.lm() != p.lm() || l < k)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    minimal.sort_by(|a, c| order.cmp(a.lm(), c.lm()));
    let mut basis = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Sorted> = minimal
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, p)| p.clone())
            .collect();
        let head = Sorted { terms: vec![minimal[k].terms[0].clone()] };
        let tail = Sorted { terms: minimal[k].terms[1..].to_vec() };
        let mut r = reduce(tail, &others, order);
        r.terms.insert(0, head.terms[0].clone());
        basis.push(r);
    }
    Ok(GroebnerBasis { nvars, order, basis, pairs_reduced: reduced })
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn pairs_reduced(&self) -> usize {
        self.pairs_reduced
    }

    /// Basis elements, monic, sorted by increasing leading monomial.
    pub fn polys(&self) -> Vec<Poly> {
        self.basis.iter().map(|s| s.to_poly(self.nvars)).collect()
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|s| s.lm().clone()).collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.iter().any(|s| s.lm().is_one())
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        assert_eq!(f.nvars(), self.nvars, "polynomial ring mismatch");
        reduce(Sorted::from_poly(f, self.order), &self.basis, self.order).to_poly(self.nvars)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Dimension of ℚ[x]/I as a ℚ-vector space.
    pub fn quotient_dimension(&self) -> QuotientDimension {
        count_standard_monomials(&self.leading_monomials(), self.nvars)
    }

    /// For a basis computed with `MonomialOrder::Block { first }`, the
    /// dimension of the extension of the ideal to K[x_0..x_{first-1}], where
    /// K is the fraction field of ℚ[x_first..].
    pub fn quotient_dimension_over_parameters(&self) -> QuotientDimension {
        let MonomialOrder::Block { first } = self.order else {
            panic!("quotient_dimension_over_parameters needs a block order");
        };
        let keep: Vec<bool> = (0..self.nvars).map(|i| i < first).collect();
        let lms: Vec<Monomial> = self.basis.iter().map(|s| s.lm().project(&keep)).collect();
        if lms.iter().any(Monomial::is_one) {
            // a nonzero element of I ∩ ℚ[parameters] becomes a unit
            return QuotientDimension::Finite(0);
        }
        count_standard_monomials(&lms, first)
    }

    /// Monomials not divisible by any leading monomial, when finitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let lms = self.leading_monomials();
        if !is_zero_dimensional(&lms, self.nvars) {
            return None;
        }
        let mut out = Vec::new();
        enumerate_standard(&lms, self.nvars, &mut Monomial::one(self.nvars), 0, &mut |m| {
            out.push(m.clone())
        });
        out.sort_by(|a, b| self.order.cmp(a, b));
        Some(out)
    }
}

fn is_zero_dimensional(lms: &[Monomial], nvars: usize) -> bool {
    if lms.iter().any(Monomial::is_one) {
        return true;
    }
    (0..nvars).all(|v| lms.iter().any(|m| m.pure_power_var() == Some(v)))
}

fn enumerate_standard(
    lms: &[Monomial],
    nvars: usize,
    current: &mut Monomial,
    from: usize,
    visit: &mut dyn FnMut(&Monomial),
) {
    if lms.iter().any(|l| l.divides(current)) {
        return;
    }
    visit(current);
    for v in from..nvars {
        let mut e = current.exponents().to_vec();
        e[v] += 1;
        let mut next = Monomial::from_exponents(e);
        enumerate_standard(lms, nvars, &mut next, v, visit);
    }
}

fn count_standard_monomials(lms: &[Monomial], nvars: usize) -> QuotientDimension {
    if !is_zero_dimensional(lms, nvars) {
        return QuotientDimension::Infinite;
    }
    let mut count = 0usize;
    enumerate_standard(lms, nvars, &mut Monomial::one(nvars), 0, &mut |_| count += 1);
    QuotientDimension::Finite(count)
}
