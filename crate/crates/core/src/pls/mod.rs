//! The basis-level map ξ_{wt_λ} ↦ q^{[λ]}σ_{w̃} from affine Grassmannian
//! homology to quantum cohomology, and its combinatorial properties.

mod rank_one;

use std::fmt;

use crate::error::{Error, Result};
use crate::peterson::quantum_weight;
use crate::rootdata::{AffineWeylElement, ParabolicData, RootDatum, WeylElement};

pub use rank_one::{rank_one_verify, RankOneCheck, RankOneQH};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PLSImage {
    Zero,
    /// q^η σ_{w̃}; η holds the coordinates of [λ] on [α_i^∨], i excluded.
    Term { eta: Vec<i64>, schubert: WeylElement },
}

impl fmt::Display for PLSImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PLSImage::Zero => write!(f, "0"),
            PLSImage::Term { eta, schubert } => write!(f, "q^{eta:?} σ_{}", schubert.word_string()),
        }
    }
}

/// Class of λ in Q^∨/Q^∨_P on the basis of excluded simple coroots.
pub fn eta(p: &ParabolicData, lambda: &[i64]) -> Vec<i64> {
    p.excluded.iter().map(|&i| lambda[i]).collect()
}

pub fn phi_pls(datum: &RootDatum, x: &AffineWeylElement, p: &ParabolicData) -> Result<PLSImage> {
    if !datum.is_waf_minus(x) {
        return Err(Error::Precondition(format!("{x:?} is not minimal in its coset xW")));
    }
    if !datum.in_wp_af(x, p) {
        return Ok(PLSImage::Zero);
    }
    Ok(PLSImage::Term { eta: eta(p, &x.lambda), schubert: datum.min_coset_rep(&x.w, p) })
}

/// Cohomological degree of q^η σ_{w̃} equals −2ℓ(x); true on zero images.
pub fn pls_degree_check(datum: &RootDatum, x: &AffineWeylElement, p: &ParabolicData) -> Result<bool> {
    Ok(match phi_pls(datum, x, p)? {
        PLSImage::Zero => true,
        PLSImage::Term { eta, schubert } => {
            let q_part: i64 = p.excluded.iter().zip(&eta).map(|(&i, e)| e * quantum_weight(datum, p, i)).sum();
            q_part + 2 * schubert.length() as i64 == -2 * datum.affine_length(x) as i64
        }
    })
}

/// [t^{μ1}]·[t^{μ2}] = [t^{μ1+μ2}] on the quantum side: exponents add and
/// all Schubert parts are σ_e.
pub fn translation_product_check(datum: &RootDatum, mu1: &[i64], mu2: &[i64], p: &ParabolicData) -> Result<bool> {
    let sum: Vec<i64> = mu1.iter().zip(mu2).map(|(a, b)| a + b).collect();
    let mut images = Vec::with_capacity(3);
    for mu in [mu1, mu2, &sum[..]] {
        if !datum.is_antidominant_coweight(mu) {
            return Err(Error::Precondition(format!("{mu:?} is not antidominant")));
        }
        let t = datum.translation(mu.to_vec());
        match phi_pls(datum, &t, p)? {
            PLSImage::Zero => {
                return Err(Error::Precondition(format!("t_{mu:?} is outside the parabolic affine set")))
            }
            PLSImage::Term { eta, schubert } => images.push((eta, schubert)),
        }
    }
    let adds = images[0].0.iter().zip(&images[1].0).map(|(a, b)| a + b).collect::<Vec<_>>() == images[2].0;
    Ok(adds && images.iter().all(|(_, w)| w.is_identity()))
}

/// One row of the PLS table: (word of w, λ, ℓ, in (W^P)_af, η, w̃).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlsRow {
    pub word: String,
    pub lambda: Vec<i64>,
    pub length: usize,
    pub in_wp_af: bool,
    pub eta: Option<Vec<i64>>,
    pub schubert: Option<String>,
}

/// Every x ∈ W_af^- with ℓ(x) ≤ `max_len`, with its image, by length.
pub fn pls_table(datum: &RootDatum, p: &ParabolicData, max_len: usize) -> Result<Vec<PlsRow>> {
    let mut elements = datum.waf_minus_elements(max_len);
    elements.sort_by_key(|(_, len)| *len);
    elements
        .into_iter()
        .map(|(x, length)| {
            let image = phi_pls(datum, &x, p)?;
            let (eta, schubert) = match &image {
                PLSImage::Zero => (None, None),
                PLSImage::Term { eta, schubert } => (Some(eta.clone()), Some(schubert.word_string())),
            };
            Ok(PlsRow {
                word: x.w.word_string(),
                lambda: x.lambda.clone(),
                length,
                in_wp_af: image != PLSImage::Zero,
                eta,
                schubert,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let a1 = RootDatum::parse("A", 1).unwrap();
        let b = a1.borel();
        let e = a1.translation(vec![0]);
        assert_eq!(phi_pls(&a1, &e, &b).unwrap(), PLSImage::Term { eta: vec![0], schubert: a1.weyl_identity() });
        let t = a1.translation(vec![-1]);
        assert_eq!(phi_pls(&a1, &t, &b).unwrap(), PLSImage::Term { eta: vec![-1], schubert: a1.weyl_identity() });
        assert!(pls_degree_check(&a1, &t, &b).unwrap());
        let st = a1.affine(a1.simple_reflection(0), vec![-1]);
        assert_eq!(
            phi_pls(&a1, &st, &b).unwrap(),
            PLSImage::Term { eta: vec![-1], schubert: a1.simple_reflection(0) }
        );
        assert!(pls_degree_check(&a1, &st, &b).unwrap());
        assert!(phi_pls(&a1, &a1.affine(a1.simple_reflection(0), vec![0]), &b).is_err());

        let a2 = RootDatum::parse("A", 2).unwrap();
        let p = a2.parabolic(&[0]).unwrap();
        // t_{−α_2^∨} fails the parabolic criterion but is not in W_af^- either
        let t2 = a2.translation(vec![0, -1]);
        assert!(!a2.in_wp_af(&t2, &p));
        assert!(phi_pls(&a2, &t2, &p).is_err());
        let t = a2.translation(vec![-2, -1]);
        assert_eq!(phi_pls(&a2, &t, &p).unwrap(), PLSImage::Term { eta: vec![-2], schubert: a2.weyl_identity() });
        assert!(pls_degree_check(&a2, &t, &p).unwrap());
        let t = a2.translation(vec![-1, -2]);
        assert_eq!(phi_pls(&a2, &t, &p).unwrap(), PLSImage::Zero);
    }

    #[test]
    fn translation_products() {
        let a1 = RootDatum::parse("A", 1).unwrap();
        assert!(translation_product_check(&a1, &[0], &[0], &a1.borel()).unwrap());
        assert!(translation_product_check(&a1, &[-1], &[-1], &a1.borel()).unwrap());
        let a2 = RootDatum::parse("A", 2).unwrap();
        // −α_1^∨ is not antidominant in A_2, so the pair is rejected
        assert!(translation_product_check(&a2, &[-1, 0], &[0, -1], &a2.borel()).is_err());
        assert!(translation_product_check(&a2, &[-1, -1], &[-2, -1], &a2.borel()).unwrap());
    }
}
