use polyalg::{determinant, LocalizedBasis, Poly, PolyMatrix, RationalFunction};

use super::{build_centralizer, wp_w0_reps, SchemePresentation};
use crate::chevalley::{AdjointElement, ChevalleyAlgebra};
use crate::error::{Error, Result};
use crate::rootdata::{ParabolicData, RootDatum};

#[derive(Clone, Debug)]
pub struct QlocResult {
    pub centralizer: SchemePresentation,
    /// q̄_{loc,i} = α_i^∨(t) for i = 1..r, as functions of (y, z, h).
    pub values: Vec<RationalFunction>,
}

/// Basis indices ordered by coroot height (Cartan vectors at height 0).
fn height_order(alg: &ChevalleyAlgebra) -> Vec<usize> {
    let d = &alg.datum;
    let ht = |b: usize| if alg.is_root_index(b) { RootDatum::height(&d.coroot(b)) } else { 0 };
    let mut order: Vec<usize> = (0..alg.dim()).collect();
    order.sort_by_key(|&b| (ht(b), b));
    order
}

/// Writes b = t·u from the centralizer as u_1 (ẇ_Pẇ_0)⁻¹ t' u_2 with
/// u_1, u_2 ∈ U^∨_− and returns α_i^∨(t').
///
/// ẇ b = (ẇ u_1 ẇ⁻¹) t' u_2 is an LDU factorization of Ad(ẇ b) in the
/// height-increasing basis order, so D is a ratio of leading principal
/// minors. Factoring Ad(ẇ b) = Ad(ẇ t ẇ⁻¹)·Ad(ẇ u) moves t into a row
/// scaling, which leaves minors of the polynomial matrix Ad(ẇ u).
pub fn qloc(datum: &RootDatum, p: &ParabolicData, equivariant: bool) -> Result<QlocResult> {
    let centralizer = build_centralizer(datum, equivariant)?;
    let alg = ChevalleyAlgebra::new(datum);
    let ring = centralizer.ring().clone();
    let n = ring.nvars();
    let npos = datum.num_positive();
    let mut u = AdjointElement::identity(alg.dim(), n);
    for k in 0..npos {
        u = u.mul(&alg.exp_root(k, &Poly::var(n, k)));
    }
    let (fwd, _) = wp_w0_reps(&alg, p, n);
    let b: PolyMatrix = fwd.mul(&u).matrix;
    let order = height_order(&alg);
    let w_inv = p.w_p.mul(&datum.longest_element()).inverse();
    let minor = |len: usize| -> Poly {
        if len == 0 {
            Poly::one(n)
        } else {
            determinant(&b.submatrix(&order[..len], &order[..len]))
        }
    };
    let mut values = Vec::with_capacity(datum.rank);
    for i in 0..datum.rank {
        let j = datum.negate_index(datum.simple_root_index(i));
        let pos = order.iter().position(|&x| x == j).unwrap();
        let (before, upto) = (minor(pos), minor(pos + 1));
        if upto.is_zero() {
            return Err(Error::Structural(format!(
                "leading minor through e_(-a{}^v) vanishes identically: wrong Bruhat cell",
                i + 1
            )));
        }
        let mut exps = vec![0i64; n];
        for (m, c) in w_inv.act_coweight(&crate::rootdata::unit(datum.rank, i)).into_iter().enumerate() {
            exps[npos + m] = c;
        }
        let torus = RationalFunction::laurent_monomial(&exps);
        values.push(&torus * &RationalFunction::new(before, upto));
    }
    Ok(QlocResult { centralizer, values })
}

/// f ≡ g in the localized quotient, assuming both denominators are units
/// there: f.num·g.den − g.num·f.den reduces to zero.
pub fn rational_equal_mod(basis: &LocalizedBasis, f: &RationalFunction, g: &RationalFunction) -> bool {
    let diff = &(f.numerator() * g.denominator()) - &(g.numerator() * f.denominator());
    basis.contains(&diff)
}
