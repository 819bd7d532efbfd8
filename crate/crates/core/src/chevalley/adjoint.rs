//! Group elements of the adjoint group G^∨ as matrices on 𝔤^∨.

use polyalg::{Poly, PolyMatrix, Q};

use super::{ChevalleyAlgebra, SparseColumn};
use crate::rootdata::WeylElement;

/// A matrix with polynomial entries acting on 𝔤^∨ in the Chevalley basis.
#[derive(Clone, Debug, PartialEq)]
pub struct AdjointElement {
    pub matrix: PolyMatrix,
    pub label: String,
}

impl AdjointElement {
    pub fn identity(dim: usize, nvars: usize) -> Self {
        AdjointElement { matrix: PolyMatrix::identity(dim, nvars), label: "e".into() }
    }

    pub fn mul(&self, other: &AdjointElement) -> AdjointElement {
        AdjointElement { matrix: self.matrix.mul(&other.matrix), label: format!("{}·{}", self.label, other.label) }
    }

    pub fn apply(&self, v: &[Poly]) -> Vec<Poly> {
        self.matrix.apply(v)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn nvars(&self) -> usize {
        self.matrix.nvars()
    }
}

fn apply_sparse(cols: &[SparseColumn], v: &[Poly], nvars: usize) -> Vec<Poly> {
    let mut out = vec![Poly::zero(nvars); v.len()];
    for (j, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (r, c) in &cols[j] {
            out[*r] = &out[*r] + &x.scale(c);
        }
    }
    out
}

impl ChevalleyAlgebra {
    /// exp(c·ad e_β) applied to a vector, without forming the matrix.
    pub fn exp_root_apply(&self, k: usize, c: &Poly, v: &[Poly]) -> Vec<Poly> {
        let nvars = c.nvars();
        let mut out = v.to_vec();
        let mut cpow = Poly::one(nvars);
        for term in self.exp_terms(k) {
            cpow = &cpow * c;
            let moved = apply_sparse(&term, v, nvars);
            for (o, m) in out.iter_mut().zip(moved) {
                if !m.is_zero() {
                    *o = &*o + &(&m * &cpow);
                }
            }
        }
        out
    }

    fn exp_terms(&self, k: usize) -> Vec<Vec<SparseColumn>> {
        self.ad_exponential_terms(k)
    }

    /// exp_{β}(c) = Σ_k c^k ad(e_β)^k / k! for root index `k`.
    pub fn exp_root(&self, k: usize, c: &Poly) -> AdjointElement {
        let nvars = c.nvars();
        let dim = self.dim();
        let mut m = PolyMatrix::identity(dim, nvars);
        let mut cpow = Poly::one(nvars);
        for term in self.exp_terms(k) {
            cpow = &cpow * c;
            for (j, col) in term.iter().enumerate() {
                for (r, v) in col {
                    let cur = m.get(*r, j).clone();
                    m.set(*r, j, &cur + &cpow.scale(v));
                }
            }
        }
        AdjointElement { matrix: m, label: format!("exp_{}", self.basis_label(k)) }
    }

    /// Diagonal torus element: e_β ↦ Π z_i^{c_i} e_β for β = Σ c_i α_i^∨.
    /// `inverses[i]` must be the inverse of `values[i]` in the ambient ring.
    pub fn torus_element(&self, values: &[Poly], inverses: &[Poly]) -> AdjointElement {
        let nvars = values[0].nvars();
        let dim = self.dim();
        let mut m = PolyMatrix::identity(dim, nvars);
        for k in 0..self.num_roots() {
            m.set(k, k, self.torus_character(k, values, inverses));
        }
        AdjointElement { matrix: m, label: "t".into() }
    }

    /// Π z_i^{c_i} for the root vector e_{β_k}.
    pub fn torus_character(&self, k: usize, values: &[Poly], inverses: &[Poly]) -> Poly {
        let nvars = values[0].nvars();
        let mut acc = Poly::one(nvars);
        for (i, &c) in self.datum.coroot(k).iter().enumerate() {
            let base = if c >= 0 { &values[i] } else { &inverses[i] };
            acc = &acc * &base.pow(c.unsigned_abs() as u32);
        }
        acc
    }

    /// λ(−1) for a cocharacter λ of T^∨, given as a G-root-lattice vector:
    /// e_β ↦ (−1)^{⟨β, λ⟩} e_β.
    pub fn cocharacter_at_minus_one(&self, lambda: &[i64], nvars: usize) -> AdjointElement {
        let mut m = PolyMatrix::identity(self.dim(), nvars);
        for k in 0..self.num_roots() {
            if self.datum.pair(lambda, &self.datum.coroot(k)).rem_euclid(2) == 1 {
                m.set(k, k, Poly::from_int(nvars, -1));
            }
        }
        AdjointElement { matrix: m, label: format!("{lambda:?}(-1)") }
    }

    /// ṡ_i = exp_{−α_i^∨}(−1) exp_{α_i^∨}(1) exp_{−α_i^∨}(−1).
    pub fn simple_rep(&self, i: usize, nvars: usize) -> AdjointElement {
        let plus = self.datum.simple_root_index(i);
        let minus = self.datum.negate_index(plus);
        let one = Poly::one(nvars);
        let f = self.exp_root(minus, &-&one);
        let e = self.exp_root(plus, &one);
        let mut s = f.mul(&e).mul(&f);
        s.label = format!("s{}", i + 1);
        s
    }

    /// ṡ_i⁻¹ = exp_{−α_i^∨}(1) exp_{α_i^∨}(−1) exp_{−α_i^∨}(1).
    pub fn simple_rep_inverse(&self, i: usize, nvars: usize) -> AdjointElement {
        let plus = self.datum.simple_root_index(i);
        let minus = self.datum.negate_index(plus);
        let one = Poly::one(nvars);
        let f = self.exp_root(minus, &one);
        let e = self.exp_root(plus, &-&one);
        let mut s = f.mul(&e).mul(&f);
        s.label = format!("s{}^-1", i + 1);
        s
    }

    /// ẇ = ṡ_{i_1} ⋯ ṡ_{i_k} along the given word.
    pub fn word_rep(&self, word: &[usize], nvars: usize) -> AdjointElement {
        let mut acc = AdjointElement::identity(self.dim(), nvars);
        for &i in word {
            acc = acc.mul(&self.simple_rep(i, nvars));
        }
        acc.label = format!("rep{word:?}");
        acc
    }

    pub fn weyl_rep(&self, w: &WeylElement, nvars: usize) -> AdjointElement {
        let mut r = self.word_rep(w.word(), nvars);
        r.label = format!("rep({})", w.word_string());
        r
    }

    pub fn weyl_rep_inverse(&self, w: &WeylElement, nvars: usize) -> AdjointElement {
        let mut acc = AdjointElement::identity(self.dim(), nvars);
        for &i in w.word().iter().rev() {
            acc = acc.mul(&self.simple_rep_inverse(i, nvars));
        }
        acc.label = format!("rep({})^-1", w.word_string());
        acc
    }

    /// e^T(h) = Σ |α_i^∨|² e_{α_i^∨} + Σ |α_i^∨|² h_i H_i; pass `None` for the
    /// non-equivariant e.
    pub fn build_et(&self, nvars: usize, h: Option<&[Poly]>) -> Vec<Poly> {
        let mut v = vec![Poly::zero(nvars); self.dim()];
        for i in 0..self.datum.rank {
            let n = self.datum.coroot_norms[i];
            v[self.datum.simple_root_index(i)] = Poly::from_int(nvars, n);
            if let Some(h) = h {
                v[self.cartan_index(i)] = h[i].scale(&Q::from_integer(n.into()));
            }
        }
        v
    }

    /// Bracket of polynomial vectors.
    pub fn bracket_poly(&self, x: &[Poly], y: &[Poly]) -> Vec<Poly> {
        let nvars = x[0].nvars();
        let mut out = vec![Poly::zero(nvars); self.dim()];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let prod = xa * yb;
                for (c, n) in self.bracket_basis(a, b) {
                    out[c] = &out[c] + &prod.scale(&Q::from_integer(n.into()));
                }
            }
        }
        out
    }

    /// g[x_a, x_b] = [g x_a, g x_b] for the listed basis pairs.
    pub fn preserves_bracket(&self, g: &AdjointElement, pairs: &[(usize, usize)]) -> bool {
        let nvars = g.nvars();
        let dim = self.dim();
        pairs.iter().all(|&(a, b)| {
            let mut br = vec![Poly::zero(nvars); dim];
            for (c, n) in self.bracket_basis(a, b) {
                br[c] = Poly::from_int(nvars, n);
            }
            let lhs = g.apply(&br);
            let rhs = self.bracket_poly(&g.matrix.column(a), &g.matrix.column(b));
            lhs == rhs
        })
    }

    /// Coefficient of e_{target} in g·e_{source}.
    pub fn matrix_coefficient(&self, g: &AdjointElement, target: usize, source: usize) -> Poly {
        g.matrix.get(target, source).clone()
    }
}
