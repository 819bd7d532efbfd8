use super::{RootDatum, WeylElement};
use crate::error::{Error, Result};

/// A standard parabolic P, described by the simple roots *not* in its Levi.
///
/// Labels are never permuted: "i ≤ k" in the usual convention reads as
/// "i ∈ excluded" here. [`ParabolicData::relabeling`] gives the order in
/// which the convention would list the simple roots.
#[derive(Clone, Debug)]
pub struct ParabolicData {
    pub excluded: Vec<usize>,
    pub levi: Vec<usize>,
    /// Indices (into `positive_roots`) of R_P⁺.
    pub r_p_plus: Vec<usize>,
    pub w_p: WeylElement,
    /// Basis of Q^∨_P: the Levi simple coroots.
    pub qp_lattice_basis: Vec<Vec<i64>>,
}

impl RootDatum {
    /// `excluded` lists 0-based simple-root indices outside the Levi.
    pub fn parabolic(&self, excluded: &[usize]) -> Result<ParabolicData> {
        if let Some(&i) = excluded.iter().find(|&&i| i >= self.rank) {
            return Err(Error::Config(format!(
                "simple root index {} out of range for {} (valid: 1..={})",
                i + 1,
                self.name(),
                self.rank
            )));
        }
        let mut ex = excluded.to_vec();
        ex.sort_unstable();
        ex.dedup();
        let levi: Vec<usize> = (0..self.rank).filter(|i| !ex.contains(i)).collect();
        let r_p_plus = (0..self.num_positive())
            .filter(|&k| ex.iter().all(|&i| self.positive_roots[k][i] == 0))
            .collect();
        let w_p = self.longest_in(&levi);
        let qp_lattice_basis = levi.iter().map(|&i| self.simple_root(i)).collect();
        Ok(ParabolicData { excluded: ex, levi, r_p_plus, w_p, qp_lattice_basis })
    }

    pub fn borel(&self) -> ParabolicData {
        let all: Vec<usize> = (0..self.rank).collect();
        self.parabolic(&all).unwrap()
    }

    /// Every standard parabolic, from the Borel (all excluded) to G itself.
    pub fn all_parabolics(&self) -> Vec<ParabolicData> {
        let r = self.rank;
        let mut out = Vec::new();
        for mask in (0..1u32 << r).rev() {
            let ex: Vec<usize> = (0..r).filter(|i| mask & (1 << i) != 0).collect();
            out.push(self.parabolic(&ex).unwrap());
        }
        out
    }

    /// Proper parabolics (at least one excluded simple root).
    pub fn proper_parabolics(&self) -> Vec<ParabolicData> {
        self.all_parabolics().into_iter().filter(|p| !p.excluded.is_empty()).collect()
    }

    pub fn w_p_elements(&self, p: &ParabolicData) -> Vec<WeylElement> {
        self.subgroup_elements(&p.levi)
    }

    /// Minimal-length representatives of W/W_P.
    pub fn w_upper_p(&self, p: &ParabolicData) -> Vec<WeylElement> {
        self.weyl_group()
            .iter()
            .filter(|w| p.levi.iter().all(|&i| !w.has_right_descent(i)))
            .cloned()
            .collect()
    }

    /// Minimal-length representative of w W_P.
    pub fn min_coset_rep(&self, w: &WeylElement, p: &ParabolicData) -> WeylElement {
        let mut v = w.clone();
        while let Some(&i) = p.levi.iter().find(|&&i| v.has_right_descent(i)) {
            v = v.mul_simple(i);
        }
        v
    }

    pub fn is_in_w_upper_p(&self, w: &WeylElement, p: &ParabolicData) -> bool {
        p.levi.iter().all(|&i| !w.has_right_descent(i))
    }
}

impl ParabolicData {
    pub fn k(&self) -> usize {
        self.excluded.len()
    }

    pub fn is_excluded(&self, i: usize) -> bool {
        self.excluded.contains(&i)
    }

    /// Position → original label: excluded simples first, then the Levi.
    pub fn relabeling(&self) -> Vec<usize> {
        self.excluded.iter().chain(self.levi.iter()).copied().collect()
    }

    /// 1-based comma-separated excluded set, e.g. "1,2"; "" for P = G.
    pub fn label(&self) -> String {
        self.excluded.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
    }

    pub fn is_borel(&self) -> bool {
        self.levi.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coset_counts() {
        let a2 = RootDatum::parse("A", 2).unwrap();
        let b = a2.borel();
        assert!(b.w_p.is_identity());
        assert_eq!(a2.w_upper_p(&b).len(), 6);
        let p = a2.parabolic(&[0]).unwrap();
        assert_eq!(a2.w_p_elements(&p).len(), 2);
        assert_eq!(a2.w_upper_p(&p).len(), 3);
        let b2 = RootDatum::parse("B", 2).unwrap();
        assert_eq!(b2.w_upper_p(&b2.parabolic(&[0]).unwrap()).len(), 4);
        assert!(a2.parabolic(&[2]).is_err());
    }
}
