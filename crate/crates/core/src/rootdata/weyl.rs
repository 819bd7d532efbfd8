use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::{unit, RootDatum};
use crate::error::{Error, Result};

/// A Weyl group element, stored by its action on simple roots and simple
/// coroots together with a canonical reduced word (lexicographically
/// smallest right-descent peeling).
#[derive(Clone)]
pub struct WeylElement {
    rank: usize,
    cartan: Arc<Vec<i64>>,
    /// column j = w(α_j), row-major r×r
    root_mat: Vec<i64>,
    /// column j = w(α_j^∨)
    coroot_mat: Vec<i64>,
    word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.root_mat == other.root_mat
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.root_mat.hash(state);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W[{}]", self.word_string())
    }
}

impl WeylElement {
    fn c(&self, i: usize, j: usize) -> i64 {
        self.cartan[i * self.rank + j]
    }

    fn identity_with(rank: usize, cartan: Arc<Vec<i64>>) -> Self {
        let mut m = vec![0; rank * rank];
        for i in 0..rank {
            m[i * rank + i] = 1;
        }
        WeylElement { rank, cartan, root_mat: m.clone(), coroot_mat: m, word: Vec::new() }
    }

    /// Right multiplication by s_i on the matrices only.
    fn mul_simple_raw(&mut self, i: usize) {
        let r = self.rank;
        // w s_i (α_j) = w(α_j) − C[i][j] w(α_i)
        for j in 0..r {
            let cij = self.c(i, j);
            let cji = self.c(j, i);
            for row in 0..r {
                if j != i {
                    self.root_mat[row * r + j] -= cij * self.root_mat[row * r + i];
                    self.coroot_mat[row * r + j] -= cji * self.coroot_mat[row * r + i];
                }
            }
        }
        for row in 0..r {
            self.root_mat[row * r + i] = -self.root_mat[row * r + i];
            self.coroot_mat[row * r + i] = -self.coroot_mat[row * r + i];
        }
    }

    fn canonicalize(mut self) -> Self {
        let mut w = self.clone();
        let mut rev = Vec::new();
        while let Some(i) = (0..w.rank).find(|&i| w.has_right_descent(i)) {
            w.mul_simple_raw(i);
            rev.push(i);
        }
        rev.reverse();
        self.word = rev;
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Word with 1-based letters, e.g. "s1s2"; "e" for the identity.
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            return "e".into();
        }
        self.word.iter().map(|i| format!("s{}", i + 1)).collect()
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// w(α_i) < 0.
    pub fn has_right_descent(&self, i: usize) -> bool {
        (0..self.rank).all(|row| self.root_mat[row * self.rank + i] <= 0)
    }

    /// w⁻¹(α_i) < 0, i.e. ℓ(s_i w) < ℓ(w).
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    pub fn act_root(&self, v: &[i64]) -> Vec<i64> {
        mat_vec(&self.root_mat, self.rank, v)
    }

    pub fn act_coweight(&self, v: &[i64]) -> Vec<i64> {
        mat_vec(&self.coroot_mat, self.rank, v)
    }

    pub fn mul_simple(&self, i: usize) -> WeylElement {
        let mut w = self.clone();
        w.mul_simple_raw(i);
        w.canonicalize()
    }

    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        let mut w = self.clone();
        for &i in &other.word {
            w.mul_simple_raw(i);
        }
        w.canonicalize()
    }

    pub fn inverse(&self) -> WeylElement {
        let mut w = WeylElement::identity_with(self.rank, Arc::clone(&self.cartan));
        for &i in self.word.iter().rev() {
            w.mul_simple_raw(i);
        }
        w.canonicalize()
    }

    /// Every reduced word of this element.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in 0..self.rank {
            if self.has_right_descent(i) {
                for mut w in self.mul_simple(i).reduced_words() {
                    w.push(i);
                    out.push(w);
                }
            }
        }
        out.sort();
        out
    }
}

fn mat_vec(m: &[i64], r: usize, v: &[i64]) -> Vec<i64> {
    (0..r).map(|row| (0..r).map(|j| m[row * r + j] * v[j]).sum()).collect()
}

impl RootDatum {
    pub fn weyl_identity(&self) -> WeylElement {
        WeylElement::identity_with(self.rank, self.cartan_flat())
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        self.weyl_identity().mul_simple(i)
    }

    /// Element of an arbitrary (not necessarily reduced) word.
    pub fn weyl_from_word(&self, word: &[usize]) -> WeylElement {
        let mut w = self.weyl_identity();
        for &i in word {
            assert!(i < self.rank, "simple reflection index out of range");
            w.mul_simple_raw(i);
        }
        w.canonicalize()
    }

    /// Element of a word that must be reduced.
    pub fn weyl_from_reduced_word(&self, word: &[usize]) -> Result<WeylElement> {
        if let Some(&i) = word.iter().find(|&&i| i >= self.rank) {
            return Err(Error::Precondition(format!("no simple reflection s{}", i + 1)));
        }
        let w = self.weyl_from_word(word);
        if w.length() != word.len() {
            return Err(Error::Precondition(format!("word {word:?} is not reduced")));
        }
        Ok(w)
    }

    /// Longest element of the subgroup generated by the listed simple
    /// reflections.
    pub fn longest_in(&self, generators: &[usize]) -> WeylElement {
        let mut w = self.weyl_identity();
        while let Some(&i) = generators.iter().find(|&&i| !w.has_right_descent(i)) {
            w = w.mul_simple(i);
        }
        w
    }

    pub fn longest_element(&self) -> WeylElement {
        let all: Vec<usize> = (0..self.rank).collect();
        self.longest_in(&all)
    }

    /// Elements of the subgroup generated by `generators`, sorted by
    /// (length, word).
    pub fn subgroup_elements(&self, generators: &[usize]) -> Vec<WeylElement> {
        let e = self.weyl_identity();
        let mut seen: HashSet<WeylElement> = HashSet::from([e.clone()]);
        let mut out = vec![e.clone()];
        let mut queue = VecDeque::from([e]);
        while let Some(w) = queue.pop_front() {
            for &i in generators {
                let v = w.mul_simple(i);
                if seen.insert(v.clone()) {
                    out.push(v.clone());
                    queue.push_back(v);
                }
            }
        }
        out.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.word.cmp(&b.word)));
        out
    }

    /// The full Weyl group (cached).
    pub fn weyl_group(&self) -> &[WeylElement] {
        self.weyl_cache.get_or_init(|| {
            let all: Vec<usize> = (0..self.rank).collect();
            self.subgroup_elements(&all)
        })
    }

    /// #{α ∈ R⁺ : w(α) < 0}.
    pub fn inversion_count(&self, w: &WeylElement) -> usize {
        self.positive_roots
            .iter()
            .filter(|a| w.act_root(a).iter().all(|&c| c <= 0))
            .count()
    }

    /// Action of w as a permutation of the root list (see [`RootDatum::root`]).
    pub fn root_permutation(&self, w: &WeylElement) -> Vec<usize> {
        (0..self.num_roots())
            .map(|k| self.root_index(&w.act_root(&self.root(k))).expect("W permutes roots"))
            .collect()
    }

    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        unit(self.rank, i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        for (t, r, n) in [("A", 1, 2), ("A", 2, 6), ("B", 2, 8), ("G", 2, 12), ("A", 3, 24), ("B", 3, 48), ("C", 3, 48)] {
            let d = RootDatum::parse(t, r).unwrap();
            assert_eq!(d.weyl_group().len(), n, "{t}{r}");
        }
    }

    #[test]
    fn length_is_inversion_count() {
        let d = RootDatum::parse("B", 3).unwrap();
        for w in d.weyl_group() {
            assert_eq!(w.length(), d.inversion_count(w));
            assert_eq!(d.weyl_from_word(w.word()), *w);
            assert_eq!(w.mul(&w.inverse()), d.weyl_identity());
        }
    }

    #[test]
    fn longest_elements() {
        let d = RootDatum::parse("B", 2).unwrap();
        let w0 = d.longest_element();
        assert_eq!(w0.length(), 4);
        assert_eq!(w0.reduced_words(), vec![vec![0, 1, 0, 1], vec![1, 0, 1, 0]]);
        assert_eq!(w0.act_root(&[1, 0]), vec![-1, 0]);
        let a2 = RootDatum::parse("A", 2).unwrap();
        assert_eq!(a2.longest_element().act_root(&[1, 0]), vec![0, -1]);
        assert!(a2.weyl_from_reduced_word(&[0, 0]).is_err());
    }
}
