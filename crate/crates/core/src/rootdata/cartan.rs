//! Linear algebra on Cartan matrices: inverses, the fundamental-coweight
//! decomposition, and the coweight cone comparison.

use num_traits::{One, Signed, Zero};
use polyalg::Q;

use super::{ParabolicData, RootDatum};
use crate::error::{Error, Result};

/// Gauss–Jordan inverse over ℚ; `None` if singular.
pub fn rational_inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].recip();
        for j in 0..n {
            a[col][j] *= &p;
            inv[col][j] *= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let (x, y) = (a[col][j].clone(), inv[col][j].clone());
                    a[r][j] -= &f * x;
                    inv[r][j] -= &f * y;
                }
            }
        }
    }
    Some(inv)
}

impl RootDatum {
    pub fn inverse_cartan(&self) -> Vec<Vec<Q>> {
        let cq: Vec<Vec<Q>> = self
            .cartan
            .iter()
            .map(|row| row.iter().map(|&x| Q::from_integer(x.into())).collect())
            .collect();
        rational_inverse(&cq).expect("Cartan matrices are invertible")
    }

    /// Solves ω^∨_{ℓ+1} = Σ_{i≤ℓ} b_i ω_i^∨ + Σ_{j>ℓ} c_j α_j^∨ (0-based
    /// `ell`, so the left side is `fundamental_coweights[ell]`). Pairing with
    /// α_m, m > ℓ gives C_2ᵀ c = e_1; pairing with α_m, m ≤ ℓ gives
    /// b_m = −Σ_j c_j C[j][m].
    pub fn decompose_fundamental_coweight(&self, ell: usize) -> Result<(Vec<Q>, Vec<Q>)> {
        if ell >= self.rank {
            return Err(Error::Precondition(format!("need 0 ≤ ℓ < {}, got {ell}", self.rank)));
        }
        let tail: Vec<usize> = (ell..self.rank).collect();
        let c2t: Vec<Vec<Q>> = tail
            .iter()
            .map(|&m| tail.iter().map(|&j| Q::from_integer(self.cartan[j][m].into())).collect())
            .collect();
        let inv = rational_inverse(&c2t).expect("Levi Cartan blocks are invertible");
        let c: Vec<Q> = inv.iter().map(|row| row[0].clone()).collect();
        let b: Vec<Q> = (0..ell)
            .map(|m| {
                let s: Q = tail
                    .iter()
                    .zip(&c)
                    .map(|(&j, cj)| cj * Q::from_integer(self.cartan[j][m].into()))
                    .sum();
                -s
            })
            .collect();
        Ok((b, c))
    }

    /// μ ∈ conv(W·λ) for λ dominant: the dominant representative of μ is
    /// ≤ λ in the coroot order.
    pub fn in_orbit_hull(&self, lambda: &[i64], mu: &[i64]) -> bool {
        let dom = self.dominant_coweight(mu);
        lambda.iter().zip(&dom).all(|(l, d)| l - d >= 0)
    }

    /// μ < ν: ν − μ is a nonzero sum of positive coroots.
    pub fn coweight_less(&self, mu: &[i64], nu: &[i64]) -> bool {
        mu != nu && mu.iter().zip(nu).all(|(m, n)| n - m >= 0)
    }
}

fn check_inputs(datum: &RootDatum, lambda: &[i64], mu_list: &[Vec<i64>]) -> Result<()> {
    if !datum.is_dominant_coweight(lambda) {
        return Err(Error::Precondition(format!("λ = {lambda:?} is not dominant")));
    }
    for mu in mu_list {
        if !datum.in_orbit_hull(lambda, mu) {
            return Err(Error::Precondition(format!("μ = {mu:?} lies outside conv(W·{lambda:?})")));
        }
    }
    Ok(())
}

fn lhs(datum: &RootDatum, p: &ParabolicData, nu: &[i64], mu_list: &[Vec<i64>]) -> bool {
    let mut d = vec![0i64; datum.rank];
    for mu in mu_list {
        for i in 0..datum.rank {
            d[i] += mu[i] - nu[i];
        }
    }
    d.iter().any(|&x| x != 0)
        && (0..datum.rank).all(|i| if p.is_excluded(i) { d[i] == 0 } else { d[i] <= 0 })
}

fn w_p_w_0(datum: &RootDatum, p: &ParabolicData, lambda: &[i64]) -> Vec<i64> {
    p.w_p.mul(&datum.longest_element()).act_coweight(lambda)
}

/// (lhs, rhs) of: Σ(μ_i − w_Pw_0λ) ∈ (Σ_{α∈R_P⁺} ℤ≤0·α^∨) ∖ {0} ⇔ μ_i < w_Pw_0λ
/// for all i, with both sides evaluated literally.
pub fn cone_membership_equiv(
    datum: &RootDatum,
    p: &ParabolicData,
    lambda: &[i64],
    mu_list: &[Vec<i64>],
) -> Result<(bool, bool)> {
    check_inputs(datum, lambda, mu_list)?;
    let nu = w_p_w_0(datum, p, lambda);
    let rhs = mu_list.iter().all(|mu| datum.coweight_less(mu, &nu));
    Ok((lhs(datum, p, &nu, mu_list), rhs))
}

/// Same left side, right side replaced by "every μ_i ≤ w_Pw_0λ and some
/// μ_i < w_Pw_0λ", which is what the comparison actually characterizes
/// once the list has more than one element.
pub fn cone_membership_corrected(
    datum: &RootDatum,
    p: &ParabolicData,
    lambda: &[i64],
    mu_list: &[Vec<i64>],
) -> Result<(bool, bool)> {
    check_inputs(datum, lambda, mu_list)?;
    let nu = w_p_w_0(datum, p, lambda);
    let le = |mu: &Vec<i64>| mu.iter().zip(&nu).all(|(m, n)| n - m >= 0);
    let rhs = mu_list.iter().all(le) && mu_list.iter().any(|mu| datum.coweight_less(mu, &nu));
    Ok((lhs(datum, p, &nu, mu_list), rhs))
}

/// All entries of C⁻¹ are ≥ 0.
pub fn inverse_cartan_nonnegative(datum: &RootDatum) -> bool {
    datum.inverse_cartan().iter().flatten().all(|x| !x.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyalg::q;

    #[test]
    fn decompositions() {
        let a2 = RootDatum::parse("A", 2).unwrap();
        assert_eq!(a2.decompose_fundamental_coweight(0).unwrap(), (vec![], vec![q(2, 3), q(1, 3)]));
        assert_eq!(a2.decompose_fundamental_coweight(1).unwrap(), (vec![q(1, 2)], vec![q(1, 2)]));
        let a1 = RootDatum::parse("A", 1).unwrap();
        assert_eq!(a1.decompose_fundamental_coweight(0).unwrap(), (vec![], vec![q(1, 2)]));
    }

    #[test]
    fn cone_examples() {
        let a2 = RootDatum::parse("A", 2).unwrap();
        let p = a2.parabolic(&[0]).unwrap();
        let lambda = vec![1, 1];
        let nu = w_p_w_0(&a2, &p, &lambda);
        assert_eq!(nu, vec![-1, 0]);
        let mu = vec![nu[0], nu[1] - 1];
        assert_eq!(cone_membership_equiv(&a2, &p, &lambda, &[mu]).unwrap(), (true, true));
        assert_eq!(cone_membership_equiv(&a2, &p, &lambda, &[nu.clone()]).unwrap(), (false, false));
        let a1 = RootDatum::parse("A", 1).unwrap();
        assert_eq!(cone_membership_equiv(&a1, &a1.borel(), &[1], &[vec![0]]).unwrap(), (false, false));
        assert!(cone_membership_equiv(&a1, &a1.borel(), &[1], &[vec![2]]).is_err());
    }
}
