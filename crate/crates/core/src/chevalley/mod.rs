//! The Lie algebra 𝔤^∨ in a Chevalley basis.
//!
//! The roots of 𝔤^∨ are the coroots of G. Basis vector `k < 2N` is the root
//! vector e_{β} for β = coroot k of the datum (same indexing as
//! [`RootDatum::root`]); basis vector `2N + i` is H_i = α_i, the coroot of
//! α_i^∨ in the dual system. Then [e_β, e_{−β}] = H_β with H_β = α when
//! β = α^∨, and [H_i, e_β] = ⟨β, α_i⟩ e_β.

mod adjoint;
mod signs;

use std::collections::HashMap;

use num_traits::{ToPrimitive, Zero};
use polyalg::Q;

use crate::rootdata::RootDatum;

pub use adjoint::AdjointElement;

#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    pub datum: RootDatum,
    npos: usize,
    /// sum[a][b] = index of β_a + β_b if it is a root.
    sum: Vec<Vec<Option<usize>>>,
    /// N_{a,b}, zero when a + b is not a root.
    constants: Vec<Vec<i64>>,
}

/// Sparse column of a constant matrix: (row, value).
pub type SparseColumn = Vec<(usize, Q)>;

impl ChevalleyAlgebra {
    pub fn new(datum: &RootDatum) -> Self {
        let npos = datum.num_positive();
        let nroots = 2 * npos;
        let mut sum = vec![vec![None; nroots]; nroots];
        for a in 0..nroots {
            let ca = datum.coroot(a);
            for b in 0..nroots {
                let cb = datum.coroot(b);
                let s: Vec<i64> = ca.iter().zip(&cb).map(|(x, y)| x + y).collect();
                if s.iter().any(|&x| x != 0) {
                    sum[a][b] = datum.coroot_index(&s);
                }
            }
        }
        let mut builder = Carter::new(datum, &sum);
        let mut constants = vec![vec![0i64; nroots]; nroots];
        for a in 0..nroots {
            for b in 0..nroots {
                if sum[a][b].is_some() {
                    constants[a][b] = builder.n(a, b);
                }
            }
        }
        ChevalleyAlgebra { datum: datum.clone(), npos, sum, constants }
    }

    pub fn dim(&self) -> usize {
        2 * self.npos + self.datum.rank
    }

    pub fn num_roots(&self) -> usize {
        2 * self.npos
    }

    pub fn cartan_index(&self, i: usize) -> usize {
        2 * self.npos + i
    }

    pub fn is_root_index(&self, b: usize) -> bool {
        b < 2 * self.npos
    }

    /// Basis index of e_β for a coroot β (simple-coroot coordinates).
    pub fn index_of_coroot(&self, beta: &[i64]) -> usize {
        self.datum.coroot_index(beta).expect("not a coroot")
    }

    pub fn basis_label(&self, b: usize) -> String {
        if self.is_root_index(b) {
            let c: Vec<String> = self.datum.coroot(b).iter().map(|x| x.to_string()).collect();
            format!("e[{}]", c.join(","))
        } else {
            format!("H{}", b - 2 * self.npos + 1)
        }
    }

    pub fn structure_constant(&self, a: usize, b: usize) -> i64 {
        self.constants[a][b]
    }

    pub fn root_sum(&self, a: usize, b: usize) -> Option<usize> {
        self.sum[a][b]
    }

    /// ⟨β_k, α_i⟩ for the root vector e_{β_k}.
    pub fn cartan_weight(&self, k: usize, i: usize) -> i64 {
        self.datum.pair(&self.datum.simple_root(i), &self.datum.coroot(k))
    }

    /// Largest p with β_b − p·β_a a root.
    pub fn chain_below(&self, a: usize, b: usize) -> i64 {
        let ca = self.datum.coroot(a);
        let mut v = self.datum.coroot(b);
        let mut p = 0;
        loop {
            for (x, y) in v.iter_mut().zip(&ca) {
                *x -= y;
            }
            if self.datum.coroot_index(&v).is_none() {
                return p;
            }
            p += 1;
        }
    }

    /// [x_a, x_b] for basis vectors as a sparse integer combination.
    pub fn bracket_basis(&self, a: usize, b: usize) -> Vec<(usize, i64)> {
        let nr = self.num_roots();
        match (a < nr, b < nr) {
            (true, true) => {
                if self.datum.negate_index(a) == b {
                    // H_β = α with β = α^∨
                    self.datum
                        .root(a)
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| **c != 0)
                        .map(|(i, c)| (nr + i, *c))
                        .collect()
                } else {
                    match self.sum[a][b] {
                        Some(c) => vec![(c, self.constants[a][b])],
                        None => vec![],
                    }
                }
            }
            (false, true) => {
                let w = self.cartan_weight(b, a - nr);
                if w == 0 {
                    vec![]
                } else {
                    vec![(b, w)]
                }
            }
            (true, false) => {
                let w = self.cartan_weight(a, b - nr);
                if w == 0 {
                    vec![]
                } else {
                    vec![(a, -w)]
                }
            }
            (false, false) => vec![],
        }
    }

    /// Bracket of two rational vectors.
    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                for (c, n) in self.bracket_basis(a, b) {
                    out[c] += xa * yb * Q::from_integer(n.into());
                }
            }
        }
        out
    }

    /// Columns of ad(x_b).
    pub fn ad_columns(&self, b: usize) -> Vec<SparseColumn> {
        (0..self.dim())
            .map(|j| {
                self.bracket_basis(b, j)
                    .into_iter()
                    .map(|(r, n)| (r, Q::from_integer(n.into())))
                    .collect()
            })
            .collect()
    }

    /// Powers ad(e_b)^k / k! for k ≥ 1 until they vanish, as sparse columns.
    pub fn ad_exponential_terms(&self, b: usize) -> Vec<Vec<SparseColumn>> {
        let ad = self.ad_columns(b);
        let mut terms: Vec<Vec<SparseColumn>> = Vec::new();
        let mut current = ad.clone();
        let mut k = 1i64;
        while current.iter().any(|c| !c.is_empty()) {
            terms.push(current.clone());
            k += 1;
            // next = ad · current / k
            current = current
                .iter()
                .map(|col| {
                    let mut acc: HashMap<usize, Q> = HashMap::new();
                    for (r, v) in col {
                        for (r2, w) in &ad[*r] {
                            *acc.entry(*r2).or_insert_with(Q::zero) += v * w;
                        }
                    }
                    let mut out: SparseColumn = acc
                        .into_iter()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(r, v)| (r, v / Q::from_integer(k.into())))
                        .collect();
                    out.sort_by_key(|(r, _)| *r);
                    out
                })
                .collect();
        }
        terms
    }
}

/// Carter's algorithm: fix signs on extraspecial pairs, derive the rest.
struct Carter<'a> {
    datum: &'a RootDatum,
    sum: &'a [Vec<Option<usize>>],
    npos: usize,
    order: Vec<usize>,
    norms: Vec<i64>,
    memo: HashMap<(usize, usize), i64>,
}

impl<'a> Carter<'a> {
    fn new(datum: &'a RootDatum, sum: &'a [Vec<Option<usize>>]) -> Self {
        let npos = datum.num_positive();
        let mut pos: Vec<usize> = (0..npos).collect();
        pos.sort_by_key(|&k| (RootDatum::height(&datum.coroot(k)), k));
        let mut order = vec![0; npos];
        for (rank, &k) in pos.iter().enumerate() {
            order[k] = rank;
        }
        let norms = (0..2 * npos).map(|k| datum.coroot_norm(&datum.root(k))).collect();
        Carter { datum, sum, npos, order, norms, memo: HashMap::new() }
    }

    fn neg(&self, k: usize) -> usize {
        self.datum.negate_index(k)
    }

    fn pos(&self, k: usize) -> bool {
        k < self.npos
    }

    fn extraspecial(&self, xi: usize) -> (usize, usize) {
        let mut best: Option<(usize, usize)> = None;
        for g in 0..self.npos {
            if let Some(d) = self.sum[xi][self.neg(g)] {
                if self.pos(d) && best.is_none_or(|(b, _)| self.order[g] < self.order[b]) {
                    best = Some((g, d));
                }
            }
        }
        best.expect("non-simple root has an extraspecial pair")
    }

    fn chain_below(&self, a: usize, b: usize) -> i64 {
        let ca = self.datum.coroot(a);
        let mut v = self.datum.coroot(b);
        let mut p = 0;
        loop {
            for (x, y) in v.iter_mut().zip(&ca) {
                *x -= y;
            }
            if self.datum.coroot_index(&v).is_none() {
                return p;
            }
            p += 1;
        }
    }

    fn n(&mut self, a: usize, b: usize) -> i64 {
        let Some(c) = self.sum[a][b] else { return 0 };
        if let Some(&v) = self.memo.get(&(a, b)) {
            return v;
        }
        let v = match (self.pos(a), self.pos(b)) {
            (true, true) => {
                let (g, d) = self.extraspecial(c);
                if (a, b) == (g, d) {
                    self.chain_below(g, d) + 1
                } else if (b, a) == (g, d) || self.order[a] > self.order[b] {
                    -self.n(b, a)
                } else {
                    self.special(a, b, c, g, d)
                }
            }
            (false, false) => {
                let (na, nb) = (self.neg(a), self.neg(b));
                -self.n(na, nb)
            }
            (false, true) => -self.n(b, a),
            (true, false) => {
                let t = self.neg(c);
                // a + b + t = 0
                let (num, den, inner) = if self.pos(c) {
                    (self.norms[t], self.norms[a], self.n(b, t))
                } else {
                    (self.norms[t], self.norms[b], self.n(t, a))
                };
                assert_eq!((num * inner) % den, 0);
                num * inner / den
            }
        };
        self.memo.insert((a, b), v);
        v
    }

    /// N_{α,β} = |ξ|²/N_{γ,δ} · (N_{β,−γ}N_{α,−δ}/|β−γ|² + N_{−γ,α}N_{β,−δ}/|α−γ|²).
    fn special(&mut self, a: usize, b: usize, xi: usize, g: usize, d: usize) -> i64 {
        let ngd = self.n(g, d);
        let (mg, md) = (self.neg(g), self.neg(d));
        let mut total = Q::zero();
        if let Some(bg) = self.sum[b][mg] {
            let t = self.n(b, mg) * self.n(a, md);
            total += Q::new(t.into(), self.norms[bg].into());
        }
        if let Some(ag) = self.sum[a][mg] {
            let t = self.n(mg, a) * self.n(b, md);
            total += Q::new(t.into(), self.norms[ag].into());
        }
        let v = total * Q::from_integer(self.norms[xi].into()) / Q::from_integer(ngd.into());
        assert!(v.is_integer(), "structure constant must be an integer");
        v.to_integer().to_i64().unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jacobi_holds(alg: &ChevalleyAlgebra) {
        let dim = alg.dim();
        let unit = |i: usize| -> Vec<Q> {
            let mut v = vec![Q::zero(); dim];
            v[i] = Q::from_integer(1.into());
            v
        };
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    let (x, y, z) = (unit(a), unit(b), unit(c));
                    let t1 = alg.bracket(&x, &alg.bracket(&y, &z));
                    let t2 = alg.bracket(&y, &alg.bracket(&z, &x));
                    let t3 = alg.bracket(&z, &alg.bracket(&x, &y));
                    for k in 0..dim {
                        assert!(
                            (&t1[k] + &t2[k] + &t3[k]).is_zero(),
                            "Jacobi fails on {} {} {}",
                            alg.basis_label(a),
                            alg.basis_label(b),
                            alg.basis_label(c)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sl2_relations() {
        let alg = ChevalleyAlgebra::new(&RootDatum::parse("A", 1).unwrap());
        assert_eq!(alg.bracket_basis(0, 1), vec![(2, 1)]);
        assert_eq!(alg.bracket_basis(2, 0), vec![(0, 2)]);
        assert_eq!(alg.bracket_basis(2, 1), vec![(1, -2)]);
    }

    #[test]
    fn rank_two_jacobi() {
        for (t, r) in [("A", 2), ("B", 2), ("G", 2)] {
            let alg = ChevalleyAlgebra::new(&RootDatum::parse(t, r).unwrap());
            jacobi_holds(&alg);
            for a in 0..alg.num_roots() {
                for b in 0..alg.num_roots() {
                    if alg.root_sum(a, b).is_some() {
                        assert_eq!(alg.structure_constant(a, b).abs(), alg.chain_below(a, b) + 1);
                    }
                }
            }
        }
        let a2 = ChevalleyAlgebra::new(&RootDatum::parse("A", 2).unwrap());
        assert_eq!(a2.structure_constant(0, 1), 1);
    }
}
