//! Sign identities for the Weyl representatives ẇ.

use polyalg::Poly;

use super::{AdjointElement, ChevalleyAlgebra};
use crate::error::Result;
use crate::rootdata::{unit, ParabolicData, WeylElement};

impl ChevalleyAlgebra {
    /// ẇ along an explicit word, rejecting non-reduced words.
    pub fn weyl_rep_word(&self, word: &[usize], nvars: usize) -> Result<AdjointElement> {
        self.datum.weyl_from_reduced_word(word)?;
        Ok(self.word_rep(word, nvars))
    }

    /// ẇ computed along every reduced word of w gives one matrix.
    pub fn word_independent(&self, w: &WeylElement) -> bool {
        let canonical = self.weyl_rep(w, 0);
        w.reduced_words().iter().all(|word| self.word_rep(word, 0).matrix == canonical.matrix)
    }

    /// ṡ_i² = α_i(−1).
    pub fn simple_square_is_sign(&self, i: usize) -> bool {
        let s = self.simple_rep(i, 0);
        s.mul(&s).matrix == self.cocharacter_at_minus_one(&self.datum.simple_root(i), 0).matrix
    }

    /// ẇ_P² = (Σ_{α∈R_P⁺} α)(−1); for P = G this is ẇ_0² = (2ρ)(−1) = e.
    pub fn wp_square_is_sign(&self, p: &ParabolicData) -> bool {
        let d = &self.datum;
        let mut sum = vec![0i64; d.rank];
        for &k in &p.r_p_plus {
            for (s, c) in sum.iter_mut().zip(&d.positive_roots[k]) {
                *s += c;
            }
        }
        let wp = self.weyl_rep(&p.w_p, 0);
        wp.mul(&wp).matrix == self.cocharacter_at_minus_one(&sum, 0).matrix
    }

    /// For each Levi index i: ẇ_Pẇ_0 · e_{−w_0α_i^∨} = e_{−w_Pα_i^∨} exactly.
    pub fn check_parabolic_sign(&self, p: &ParabolicData) -> Vec<(usize, bool)> {
        let d = &self.datum;
        let w0 = d.longest_element();
        let g = self.weyl_rep(&p.w_p, 0).mul(&self.weyl_rep(&w0, 0));
        let neg = |v: Vec<i64>| v.into_iter().map(|c| -c).collect::<Vec<_>>();
        p.levi
            .iter()
            .map(|&i| {
                let src = self.index_of_coroot(&neg(w0.act_coweight(&unit(d.rank, i))));
                let dst = self.index_of_coroot(&neg(p.w_p.act_coweight(&unit(d.rank, i))));
                let col = g.matrix.column(src);
                let ok = col
                    .iter()
                    .enumerate()
                    .all(|(r, x)| if r == dst { *x == Poly::one(0) } else { x.is_zero() });
                (i, ok)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootDatum;

    #[test]
    fn rejects_non_reduced_words() {
        let alg = ChevalleyAlgebra::new(&RootDatum::parse("A", 2).unwrap());
        assert!(alg.weyl_rep_word(&[0, 0], 0).is_err());
        assert!(alg.weyl_rep_word(&[], 0).unwrap().is_identity());
    }

    #[test]
    fn parabolic_sign_examples() {
        for t in ["A", "B"] {
            let d = RootDatum::parse(t, 2).unwrap();
            let alg = ChevalleyAlgebra::new(&d);
            let p = d.parabolic(&[0]).unwrap();
            assert_eq!(alg.check_parabolic_sign(&p), vec![(1, true)]);
            let g = d.parabolic(&[]).unwrap();
            assert!(alg.check_parabolic_sign(&g).iter().all(|x| x.1));
        }
    }
}
