//! Polynomial presentations of 𝒴_P, 𝒴_P* and the centralizer B^∨_{e^T}.
//!
//! Variable names: `x_<c>` for the cell coordinate attached to −α where
//! `<c>` lists the simple-root coefficients of α (e.g. `x_11`), `y_<c>` for
//! the positive unipotent coordinate of the centralizer, `h_j`, `q_i`,
//! `z_i` (all 1-based).

mod analysis;
mod json;
mod qloc;

use polyalg::{determinant, IdealPresentation, MonomialOrder, Poly, PolyRing, Variable, Q};

use crate::chevalley::{AdjointElement, ChevalleyAlgebra};
use crate::error::Result;
use crate::rootdata::{ParabolicData, RootDatum};

pub use analysis::{fiber_analysis, generic_rank, levi_qbar_is_one, RankReport};
pub use json::{PresentationJson, VariableJson};
pub use qloc::{qloc, rational_equal_mod, QlocResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VariableRole {
    Cell,
    Equivariant,
    Quantum,
    Torus,
    UnipotentPlus,
    Auxiliary,
}

impl VariableRole {
    pub fn as_str(self) -> &'static str {
        match self {
            VariableRole::Cell => "cell",
            VariableRole::Equivariant => "equivariant",
            VariableRole::Quantum => "quantum",
            VariableRole::Torus => "torus",
            VariableRole::UnipotentPlus => "unipotent-plus",
            VariableRole::Auxiliary => "auxiliary",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemeKind {
    Yp,
    YpStar,
    Centralizer,
}

#[derive(Clone, Debug)]
pub struct SchemePresentation {
    pub kind: SchemeKind,
    pub datum: RootDatum,
    pub parabolic: ParabolicData,
    pub equivariant: bool,
    pub ideal: IdealPresentation,
    pub roles: Vec<VariableRole>,
    pub weights: Vec<i64>,
    /// q̄_1, …, q̄_r (empty for the centralizer).
    pub qbar: Vec<Poly>,
    /// M = (u ẇ_P ẇ_0)⁻¹ · e^T(h) in the Chevalley basis (𝒴_P kinds only).
    pub m_vector: Vec<Poly>,
    /// Positive-root indices α with a cell coordinate x_{−α}, or a unipotent
    /// coordinate y_α for the centralizer, in variable order.
    pub coordinate_roots: Vec<usize>,
}

impl SchemePresentation {
    pub fn ring(&self) -> &PolyRing {
        &self.ideal.ring
    }

    pub fn variables_with_role(&self, role: VariableRole) -> Vec<usize> {
        (0..self.roles.len()).filter(|&i| self.roles[i] == role).collect()
    }

    /// Names of the parameters h_j and q_i.
    pub fn parameter_names(&self) -> Vec<String> {
        self.ring()
            .variables()
            .iter()
            .zip(&self.roles)
            .filter(|(_, r)| matches!(r, VariableRole::Equivariant | VariableRole::Quantum))
            .map(|(v, _)| v.name.clone())
            .collect()
    }

    pub fn cell_count(&self) -> usize {
        self.variables_with_role(VariableRole::Cell).len()
    }

    pub fn qbar_values(&self, i: usize) -> &Poly {
        &self.qbar[i]
    }

    /// Weight of q_i: 2·Σ_{α∈R⁺∖R_P⁺} α(α_i^∨).
    pub fn quantum_weight(&self, i: usize) -> i64 {
        quantum_weight(&self.datum, &self.parabolic, i)
    }
}

pub fn quantum_weight(datum: &RootDatum, p: &ParabolicData, i: usize) -> i64 {
    let coroot = crate::rootdata::unit(datum.rank, i);
    2 * (0..datum.num_positive())
        .filter(|k| !p.r_p_plus.contains(k))
        .map(|k| datum.pair(&datum.positive_roots[k], &coroot))
        .sum::<i64>()
}

fn root_suffix(root: &[i64]) -> String {
    if root.iter().all(|&c| (0..10).contains(&c)) {
        root.iter().map(|c| c.to_string()).collect()
    } else {
        root.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("_")
    }
}

/// Positive-root indices outside R_P⁺, in height-then-index order.
pub fn cell_roots(datum: &RootDatum, p: &ParabolicData) -> Vec<usize> {
    (0..datum.num_positive()).filter(|k| !p.r_p_plus.contains(k)).collect()
}

/// Index of −w_0 α_i^∨ among the Chevalley basis vectors.
pub fn dual_simple_index(alg: &ChevalleyAlgebra, i: usize) -> usize {
    let d = &alg.datum;
    let image = d.longest_element().act_coweight(&crate::rootdata::unit(d.rank, i));
    let neg: Vec<i64> = image.iter().map(|c| -c).collect();
    alg.index_of_coroot(&neg)
}

/// ẇ_P ẇ_0 and its inverse as constant matrices.
pub fn wp_w0_reps(alg: &ChevalleyAlgebra, p: &ParabolicData, nvars: usize) -> (AdjointElement, AdjointElement) {
    let w0 = alg.datum.longest_element();
    let fwd = alg.weyl_rep(&p.w_p, nvars).mul(&alg.weyl_rep(&w0, nvars));
    let inv = alg.weyl_rep_inverse(&w0, nvars).mul(&alg.weyl_rep_inverse(&p.w_p, nvars));
    (fwd, inv)
}

struct CellRing {
    ring: PolyRing,
    roles: Vec<VariableRole>,
    weights: Vec<i64>,
    cells: Vec<usize>,
}

fn cell_ring(datum: &RootDatum, p: &ParabolicData, equivariant: bool) -> CellRing {
    let cells = cell_roots(datum, p);
    let mut vars = Vec::new();
    let mut roles = Vec::new();
    let mut weights = Vec::new();
    for &k in &cells {
        vars.push(format!("x_{}", root_suffix(&datum.positive_roots[k])));
        roles.push(VariableRole::Cell);
        weights.push(2 * RootDatum::height(&datum.positive_coroots[k]));
    }
    if equivariant {
        for j in 0..datum.rank {
            vars.push(format!("h_{}", j + 1));
            roles.push(VariableRole::Equivariant);
            weights.push(2);
        }
    }
    for &i in &p.excluded {
        vars.push(format!("q_{}", i + 1));
        roles.push(VariableRole::Quantum);
        weights.push(quantum_weight(datum, p, i));
    }
    let vars = vars
        .into_iter()
        .zip(&weights)
        .map(|(name, &w)| Variable { name, weight: Some(w) })
        .collect();
    let ring = PolyRing::from_variables(vars, MonomialOrder::Block { first: cells.len() })
        .expect("generated names are valid");
    CellRing { ring, roles, weights, cells }
}

fn equivariant_vars(ring: &PolyRing, rank: usize, equivariant: bool) -> Option<Vec<Poly>> {
    equivariant.then(|| (0..rank).map(|j| ring.var(&format!("h_{}", j + 1))).collect())
}

/// M = (u ẇ_P ẇ_0)⁻¹ · e^T(h) for u = Π exp(x_{−α} e_{−α^∨}) over the cell
/// roots in order.
fn m_vector(alg: &ChevalleyAlgebra, p: &ParabolicData, cr: &CellRing, equivariant: bool) -> Vec<Poly> {
    let ring = &cr.ring;
    let n = ring.nvars();
    let h = equivariant_vars(ring, alg.datum.rank, equivariant);
    let mut v = alg.build_et(n, h.as_deref());
    // u⁻¹ = exp(−x_m) ⋯ exp(−x_1): the first factor acts first
    for (pos, &k) in cr.cells.iter().enumerate() {
        let neg = alg.datum.negate_index(k);
        v = alg.exp_root_apply(neg, &-&Poly::var(n, pos), &v);
    }
    let (_, inv) = wp_w0_reps(alg, p, n);
    inv.apply(&v)
}

/// The 𝒴_P presentation.
pub fn build_yp(datum: &RootDatum, p: &ParabolicData, equivariant: bool) -> Result<SchemePresentation> {
    let alg = ChevalleyAlgebra::new(datum);
    let cr = cell_ring(datum, p, equivariant);
    let m = m_vector(&alg, p, &cr, equivariant);
    let n = cr.ring.nvars();
    let mut generators = Vec::new();
    for k in 0..datum.num_positive() {
        if RootDatum::height(&datum.positive_coroots[k]) > 1 && !m[k].is_zero() {
            generators.push(m[k].clone());
        }
    }
    let qbar: Vec<Poly> = (0..datum.rank)
        .map(|i| {
            let norm = Q::from_integer(datum.coroot_norms[i].into());
            m[dual_simple_index(&alg, i)].scale(&norm.recip())
        })
        .collect();
    for &i in &p.excluded {
        generators.push(&qbar[i] - &cr.ring.var(&format!("q_{}", i + 1)));
    }
    debug_assert!(generators.iter().all(|g| g.nvars() == n));
    Ok(SchemePresentation {
        kind: SchemeKind::Yp,
        datum: datum.clone(),
        parabolic: p.clone(),
        equivariant,
        ideal: IdealPresentation::new(cr.ring, generators),
        roles: cr.roles,
        weights: cr.weights,
        qbar,
        m_vector: m,
        coordinate_roots: cr.cells,
    })
}

/// det of the negative-root block of Ad(u ẇ_P ẇ_0); nonzero exactly on the
/// open cell U^∨B_−^∨/B_−^∨.
pub fn open_cell_function(alg: &ChevalleyAlgebra, p: &ParabolicData, ring: &PolyRing, cells: &[usize]) -> Poly {
    let n = ring.nvars();
    let dim = alg.dim();
    let mut g = AdjointElement::identity(dim, n);
    for (pos, &k) in cells.iter().enumerate() {
        g = g.mul(&alg.exp_root(alg.datum.negate_index(k), &Poly::var(n, pos)));
    }
    let (fwd, _) = wp_w0_reps(alg, p, n);
    let g = g.mul(&fwd);
    let neg: Vec<usize> = (0..alg.datum.num_positive()).map(|k| alg.datum.negate_index(k)).collect();
    determinant(&g.matrix.submatrix(&neg, &neg))
}

/// 𝒴_P* = 𝒴_P with the open-cell function inverted.
pub fn build_yp_star(datum: &RootDatum, p: &ParabolicData, equivariant: bool) -> Result<SchemePresentation> {
    let mut pres = build_yp(datum, p, equivariant)?;
    let alg = ChevalleyAlgebra::new(datum);
    let f = open_cell_function(&alg, p, &pres.ideal.ring, &pres.coordinate_roots);
    pres.ideal = pres.ideal.clone().with_inverted(vec![f]);
    pres.kind = SchemeKind::YpStar;
    Ok(pres)
}

/// Ad(t·u)·e^T(h) − e^T(h) for t ∈ T^∨ with α_i^∨(t) = z_i and
/// u = Π exp(y_β e_β) over positive β.
pub fn build_centralizer(datum: &RootDatum, equivariant: bool) -> Result<SchemePresentation> {
    let alg = ChevalleyAlgebra::new(datum);
    let npos = datum.num_positive();
    let r = datum.rank;
    let mut vars = Vec::new();
    let mut roles = Vec::new();
    let mut weights = Vec::new();
    for k in 0..npos {
        vars.push(format!("y_{}", root_suffix(&datum.positive_roots[k])));
        roles.push(VariableRole::UnipotentPlus);
        weights.push(-2 * RootDatum::height(&datum.positive_coroots[k]));
    }
    for i in 0..r {
        vars.push(format!("z_{}", i + 1));
        roles.push(VariableRole::Torus);
        weights.push(0);
    }
    if equivariant {
        for j in 0..r {
            vars.push(format!("h_{}", j + 1));
            roles.push(VariableRole::Equivariant);
            weights.push(2);
        }
    }
    let vars = vars
        .into_iter()
        .zip(&weights)
        .map(|(name, &w)| Variable { name, weight: Some(w) })
        .collect();
    let ring = PolyRing::from_variables(vars, MonomialOrder::Grevlex).expect("generated names are valid");
    let comps = centralizer_components(&alg, &ring, equivariant, 0);
    let generators: Vec<Poly> = comps.into_iter().filter(|g| !g.is_zero()).collect();
    let z: Vec<Poly> = (0..r).map(|i| ring.var(&format!("z_{}", i + 1))).collect();
    let ideal = IdealPresentation::new(ring, generators).with_inverted(z);
    Ok(SchemePresentation {
        kind: SchemeKind::Centralizer,
        datum: datum.clone(),
        parabolic: datum.borel(),
        equivariant,
        ideal,
        roles,
        weights,
        qbar: Vec::new(),
        m_vector: Vec::new(),
        coordinate_roots: (0..npos).collect(),
    })
}

/// Components of Ad(t u) e^T − e^T where the y and z variables start at
/// `offset` (y first, then z) and h follows after both blocks or at the end.
pub(crate) fn centralizer_components(alg: &ChevalleyAlgebra, ring: &PolyRing, equivariant: bool, offset: usize) -> Vec<Poly> {
    let d = &alg.datum;
    let n = ring.nvars();
    let npos = d.num_positive();
    let h = equivariant_vars(ring, d.rank, equivariant);
    let et = alg.build_et(n, h.as_deref());
    let mut v = et.clone();
    for k in (0..npos).rev() {
        v = alg.exp_root_apply(k, &Poly::var(n, offset + k), &v);
    }
    let z: Vec<Poly> = (0..d.rank).map(|i| Poly::var(n, offset + npos + i)).collect();
    for (k, entry) in v.iter_mut().enumerate().take(npos) {
        if !entry.is_zero() {
            *entry = &*entry * &alg.torus_character(k, &z, &z);
        }
    }
    v.iter().zip(&et).map(|(a, b)| a - b).collect()
}

/// True iff every non-simple component of M on −w_0 R_P⁺ vanishes.
pub fn redundancy_check(datum: &RootDatum, p: &ParabolicData) -> Result<bool> {
    let pres = build_yp(datum, p, true)?;
    Ok(redundant_components(&pres).iter().all(|(_, poly)| poly.is_zero()))
}

/// (coroot index, component of M) for every non-simple −w_0α, α ∈ R_P⁺.
pub fn redundant_components(pres: &SchemePresentation) -> Vec<(usize, Poly)> {
    let d = &pres.datum;
    let w0 = d.longest_element();
    pres.parabolic
        .r_p_plus
        .iter()
        .filter_map(|&k| {
            let img: Vec<i64> = w0.act_coweight(&d.positive_coroots[k]).iter().map(|c| -c).collect();
            (RootDatum::height(&img) > 1).then(|| {
                let idx = d.coroot_index(&img).expect("W permutes coroots");
                (idx, pres.m_vector[idx].clone())
            })
        })
        .collect()
}

/// Weighted-homogeneity report: (all generators homogeneous, every q̄_i of
/// weight wt(q_i)).
pub fn homogeneity_check(pres: &SchemePresentation) -> (bool, bool) {
    let gens = pres
        .ideal
        .generators
        .iter()
        .all(|g| polyalg::is_weighted_homogeneous(g, &pres.weights).is_some());
    let qbar = (0..pres.datum.rank).all(|i| {
        let w = pres.quantum_weight(i);
        polyalg::is_weighted_homogeneous(&pres.qbar[i], &pres.weights) == Some(w)
    });
    (gens, qbar)
}
