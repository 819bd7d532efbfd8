//! Root systems, Weyl groups and affine Weyl groups of simple type.
//!
//! Conventions: roots are integer vectors in simple-root coordinates and
//! coweights/coroots are integer vectors in simple-coroot coordinates. The
//! Cartan matrix is `C[i][j] = α_j(α_i^∨)` (Bourbaki labelling), so
//! `α(λ) = Σ_ij a_i l_j C[j][i]` for `α = Σ a_i α_i`, `λ = Σ l_j α_j^∨`.
//! Indices are 0-based throughout the library.

mod affine;
mod cartan;
mod parabolic;
mod weyl;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};
use polyalg::Q;

use crate::error::{Error, Result};

pub use affine::AffineWeylElement;
pub use cartan::{cone_membership_corrected, cone_membership_equiv, inverse_cartan_nonnegative, rational_inverse};
pub use parabolic::ParabolicData;
pub use weyl::WeylElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(LieType::A),
            "B" => Ok(LieType::B),
            "C" => Ok(LieType::C),
            "D" => Ok(LieType::D),
            "E" => Ok(LieType::E),
            "F" => Ok(LieType::F),
            "G" => Ok(LieType::G),
            _ => Err(Error::Config(format!("unknown Lie type `{s}`"))),
        }
    }
}

/// A simple root system together with its coroots and Weyl-group data.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub lie_type: LieType,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub positive_coroots: Vec<Vec<i64>>,
    /// |α_i|² for simple roots, short roots normalized to 1.
    pub root_norms: Vec<i64>,
    /// |α_i^∨|² for simple coroots: 1 on short coroots, ℓ_G on long ones.
    pub coroot_norms: Vec<i64>,
    pub ell_g: i64,
    pub two_rho: Vec<i64>,
    pub two_rho_check: Vec<i64>,
    /// ω_i^∨ in simple-coroot coordinates.
    pub fundamental_coweights: Vec<Vec<Q>>,
    pub coxeter_number: i64,
    cartan_flat: Arc<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
    weyl_cache: OnceLock<Vec<WeylElement>>,
}

fn cartan_matrix(t: LieType, r: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; r]; r];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match t {
        LieType::A | LieType::B | LieType::C | LieType::F | LieType::G => {
            for i in 0..r - 1 {
                link(i, i + 1);
            }
        }
        LieType::D => {
            for i in 0..r - 2 {
                link(i, i + 1);
            }
            link(r - 3, r - 1);
        }
        LieType::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..r - 1 {
                link(i, i + 1);
            }
        }
    }
    match t {
        LieType::B => c[r - 1][r - 2] = -2,
        LieType::C => c[r - 2][r - 1] = -2,
        LieType::F => c[2][1] = -2,
        LieType::G => c[0][1] = -3,
        _ => {}
    }
    c
}

fn valid(t: LieType, r: usize) -> bool {
    match t {
        LieType::A => r >= 1,
        LieType::B => r >= 2,
        LieType::C => r >= 3,
        LieType::D => r >= 4,
        LieType::E => (6..=8).contains(&r),
        LieType::F => r == 4,
        LieType::G => r == 2,
    }
}

impl RootDatum {
    pub fn new(lie_type: LieType, rank: usize) -> Result<Self> {
        if !valid(lie_type, rank) {
            return Err(Error::Config(format!("invalid type/rank pair ({lie_type}, {rank})")));
        }
        Ok(Self::from_cartan(lie_type, cartan_matrix(lie_type, rank)))
    }

    /// Convenience constructor from strings such as ("B", 2).
    pub fn parse(lie_type: &str, rank: usize) -> Result<Self> {
        Self::new(lie_type.parse()?, rank)
    }

    fn from_cartan(lie_type: LieType, cartan: Vec<Vec<i64>>) -> Self {
        let r = cartan.len();

        // symmetrize: n_i C_ij = n_j C_ji
        let mut norms: Vec<Option<Q>> = vec![None; r];
        norms[0] = Some(Q::one());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in 0..r {
                if i != j && cartan[i][j] != 0 && norms[j].is_none() {
                    let ni = norms[i].clone().unwrap();
                    norms[j] = Some(ni * Q::from_integer(cartan[i][j].into()) / Q::from_integer(cartan[j][i].into()));
                    queue.push_back(j);
                }
            }
        }
        let norms: Vec<Q> = norms.into_iter().map(|n| n.expect("connected Dynkin diagram")).collect();
        let min = norms.iter().min().unwrap().clone();
        let root_norms: Vec<i64> = norms
            .iter()
            .map(|n| {
                let v = n / &min;
                assert!(v.is_integer());
                i64::try_from(v.to_integer()).unwrap()
            })
            .collect();
        let ell_g = *root_norms.iter().max().unwrap();
        let coroot_norms: Vec<i64> = root_norms.iter().map(|n| ell_g / n).collect();

        // positive roots by closure under simple reflections
        let simple: Vec<Vec<i64>> = (0..r).map(|i| unit(r, i)).collect();
        let mut seen: HashMap<Vec<i64>, ()> = simple.iter().map(|s| (s.clone(), ())).collect();
        let mut pos = simple.clone();
        let mut queue: VecDeque<Vec<i64>> = simple.into_iter().collect();
        while let Some(beta) = queue.pop_front() {
            for i in 0..r {
                let img = reflect_root_with(&cartan, i, &beta);
                if img.iter().all(|&c| c >= 0) && !seen.contains_key(&img) {
                    seen.insert(img.clone(), ());
                    pos.push(img.clone());
                    queue.push_back(img);
                }
            }
        }
        pos.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });

        let coroot_of = |a: &[i64]| -> Vec<i64> {
            let n2 = root_norm_with(&cartan, &root_norms, a);
            a.iter()
                .zip(&root_norms)
                .map(|(c, ni)| {
                    let num = c * ni;
                    assert_eq!(num % n2, 0, "coroot coordinates must be integral");
                    num / n2
                })
                .collect()
        };
        let pos_coroots: Vec<Vec<i64>> = pos.iter().map(|a| coroot_of(a)).collect();

        let mut root_index = HashMap::new();
        for (k, a) in pos.iter().enumerate() {
            root_index.insert(a.clone(), k);
            root_index.insert(a.iter().map(|c| -c).collect(), k + pos.len());
        }

        let sum = |vs: &[Vec<i64>]| -> Vec<i64> {
            (0..r).map(|i| vs.iter().map(|v| v[i]).sum()).collect()
        };
        let two_rho = sum(&pos);
        let two_rho_check = sum(&pos_coroots);

        let cq: Vec<Vec<Q>> = cartan
            .iter()
            .map(|row| row.iter().map(|&x| Q::from_integer(x.into())).collect())
            .collect();
        let inv = rational_inverse(&cq).expect("Cartan matrices are invertible");
        // a·C = e_i, so ω_i^∨ is row i of C^{-1}
        let fundamental_coweights = inv.clone();

        let coxeter_number = pos.last().unwrap().iter().sum::<i64>() + 1;
        let cartan_flat = Arc::new(cartan.iter().flatten().copied().collect());

        RootDatum {
            lie_type,
            rank: r,
            cartan,
            positive_roots: pos,
            positive_coroots: pos_coroots,
            root_norms,
            coroot_norms,
            ell_g,
            two_rho,
            two_rho_check,
            fundamental_coweights,
            coxeter_number,
            cartan_flat,
            root_index,
            weyl_cache: OnceLock::new(),
        }
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.lie_type, self.rank)
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    /// All roots: positive roots first, then their negatives in the same
    /// order. Root `k + N` is `−(root k)` where `N` is the number of
    /// positive roots.
    pub fn root(&self, k: usize) -> Vec<i64> {
        let n = self.num_positive();
        if k < n {
            self.positive_roots[k].clone()
        } else {
            self.positive_roots[k - n].iter().map(|c| -c).collect()
        }
    }

    pub fn coroot(&self, k: usize) -> Vec<i64> {
        let n = self.num_positive();
        if k < n {
            self.positive_coroots[k].clone()
        } else {
            self.positive_coroots[k - n].iter().map(|c| -c).collect()
        }
    }

    pub fn num_roots(&self) -> usize {
        2 * self.num_positive()
    }

    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    /// Index of the root whose coroot is `coroot`.
    pub fn coroot_index(&self, coroot: &[i64]) -> Option<usize> {
        let n = self.num_positive();
        let neg: Vec<i64> = coroot.iter().map(|c| -c).collect();
        if let Some(k) = self.positive_coroots.iter().position(|c| c == coroot) {
            return Some(k);
        }
        self.positive_coroots.iter().position(|c| *c == neg).map(|k| k + n)
    }

    pub fn negate_index(&self, k: usize) -> usize {
        let n = self.num_positive();
        if k < n {
            k + n
        } else {
            k - n
        }
    }

    pub fn is_positive_index(&self, k: usize) -> bool {
        k < self.num_positive()
    }

    pub fn simple_root_index(&self, i: usize) -> usize {
        self.root_index(&unit(self.rank, i)).unwrap()
    }

    pub fn height(v: &[i64]) -> i64 {
        v.iter().sum()
    }

    pub fn highest_root(&self) -> Vec<i64> {
        self.positive_roots.last().unwrap().clone()
    }

    /// α(λ) for a root (simple-root coordinates) and a coweight
    /// (simple-coroot coordinates).
    pub fn pair(&self, root: &[i64], coweight: &[i64]) -> i64 {
        let mut s = 0;
        for (i, a) in root.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, l) in coweight.iter().enumerate() {
                s += a * l * self.cartan[j][i];
            }
        }
        s
    }

    /// α(λ) for a rational coweight.
    pub fn pair_rational(&self, root: &[i64], coweight: &[Q]) -> Q {
        let mut s = Q::zero();
        for (i, a) in root.iter().enumerate() {
            for (j, l) in coweight.iter().enumerate() {
                s += l * Q::from_integer((a * self.cartan[j][i]).into());
            }
        }
        s
    }

    pub fn reflect_root(&self, i: usize, beta: &[i64]) -> Vec<i64> {
        reflect_root_with(&self.cartan, i, beta)
    }

    /// s_i(λ) = λ − α_i(λ) α_i^∨.
    pub fn reflect_coweight(&self, i: usize, lambda: &[i64]) -> Vec<i64> {
        let p = self.pair(&unit(self.rank, i), lambda);
        let mut out = lambda.to_vec();
        out[i] -= p;
        out
    }

    /// |α|² in the normalization where short roots have norm 1.
    pub fn root_norm(&self, root: &[i64]) -> i64 {
        root_norm_with(&self.cartan, &self.root_norms, root)
    }

    /// |α^∨|² for the coroot of `root`; ℓ_G / |α|².
    pub fn coroot_norm(&self, root: &[i64]) -> i64 {
        self.ell_g / self.root_norm(root)
    }

    pub fn coroot_of_root(&self, root: &[i64]) -> Vec<i64> {
        self.coroot(self.root_index(root).expect("not a root"))
    }

    pub fn root_of_coroot(&self, coroot: &[i64]) -> Vec<i64> {
        self.root(self.coroot_index(coroot).expect("not a coroot"))
    }

    pub(crate) fn cartan_flat(&self) -> Arc<Vec<i64>> {
        Arc::clone(&self.cartan_flat)
    }

    /// Dominant representative of the W-orbit of a coweight.
    pub fn dominant_coweight(&self, lambda: &[i64]) -> Vec<i64> {
        let mut v = lambda.to_vec();
        loop {
            match (0..self.rank).find(|&i| self.pair(&unit(self.rank, i), &v) < 0) {
                Some(i) => v = self.reflect_coweight(i, &v),
                None => return v,
            }
        }
    }

    pub fn is_dominant_coweight(&self, lambda: &[i64]) -> bool {
        (0..self.rank).all(|i| self.pair(&unit(self.rank, i), lambda) >= 0)
    }

    pub fn is_antidominant_coweight(&self, lambda: &[i64]) -> bool {
        (0..self.rank).all(|i| self.pair(&unit(self.rank, i), lambda) <= 0)
    }

    /// Every simple type of rank at most `max_rank`, in a fixed order.
    pub fn all_types_up_to(max_rank: usize) -> Vec<RootDatum> {
        let mut out = Vec::new();
        for r in 1..=max_rank {
            for t in [LieType::A, LieType::B, LieType::C, LieType::D, LieType::E, LieType::F, LieType::G] {
                if valid(t, r) {
                    out.push(RootDatum::new(t, r).unwrap());
                }
            }
        }
        out
    }
}

pub(crate) fn unit(r: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; r];
    v[i] = 1;
    v
}

fn reflect_root_with(cartan: &[Vec<i64>], i: usize, beta: &[i64]) -> Vec<i64> {
    // β(α_i^∨) = Σ_j b_j C[i][j]
    let p: i64 = beta.iter().enumerate().map(|(j, b)| b * cartan[i][j]).sum();
    let mut out = beta.to_vec();
    out[i] -= p;
    out
}

/// |α|² from (α_i, α_j) = C[i][j] n_i / 2.
fn root_norm_with(cartan: &[Vec<i64>], norms: &[i64], a: &[i64]) -> i64 {
    let mut s = 0;
    for i in 0..a.len() {
        for j in 0..a.len() {
            s += a[i] * a[j] * cartan[i][j] * norms[i];
        }
    }
    s / 2
}
