use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::{ParabolicData, RootDatum, WeylElement};

/// w·t_λ acting on the coweight space by x ↦ w(x + λ).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineWeylElement {
    pub w: WeylElement,
    pub lambda: Vec<i64>,
}

impl fmt::Debug for AffineWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {:?})", self.w.word_string(), self.lambda)
    }
}

impl AffineWeylElement {
    pub fn new(w: WeylElement, lambda: Vec<i64>) -> Self {
        assert_eq!(w.rank(), lambda.len());
        AffineWeylElement { w, lambda }
    }

    /// (w1 t_λ1)(w2 t_λ2) = w1w2 t_{λ2 + w2⁻¹λ1}.
    pub fn mul(&self, other: &AffineWeylElement) -> AffineWeylElement {
        let moved = other.w.inverse().act_coweight(&self.lambda);
        let lambda = other.lambda.iter().zip(&moved).map(|(a, b)| a + b).collect();
        AffineWeylElement { w: self.w.mul(&other.w), lambda }
    }
}

/// floor(a / b) for b > 0.
fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

impl RootDatum {
    pub fn translation(&self, lambda: Vec<i64>) -> AffineWeylElement {
        AffineWeylElement::new(self.weyl_identity(), lambda)
    }

    pub fn affine(&self, w: WeylElement, lambda: Vec<i64>) -> AffineWeylElement {
        AffineWeylElement::new(w, lambda)
    }

    /// s_0 = s_θ t_{−θ^∨}, the reflection in the wall θ(x) = 1.
    pub fn affine_s0(&self) -> AffineWeylElement {
        let theta = self.highest_root();
        let theta_check = self.coroot_of_root(&theta);
        let s_theta = self.reflection_of_root(&theta);
        AffineWeylElement::new(s_theta, theta_check.iter().map(|c| -c).collect())
    }

    /// s_0 followed by s_1, …, s_r.
    pub fn affine_generators(&self) -> Vec<AffineWeylElement> {
        let mut gens = vec![self.affine_s0()];
        for i in 0..self.rank {
            gens.push(AffineWeylElement::new(self.simple_reflection(i), vec![0; self.rank]));
        }
        gens
    }

    /// Reflection s_α for a positive root α, found by conjugating a simple
    /// reflection.
    pub fn reflection_of_root(&self, alpha: &[i64]) -> WeylElement {
        // walk α down to a simple root: α = u(α_i), then s_α = u s_i u⁻¹
        let mut u = self.weyl_identity();
        let mut beta = alpha.to_vec();
        loop {
            if let Some(i) = (0..self.rank).find(|&i| beta == self.simple_root(i)) {
                return u.mul(&self.simple_reflection(i)).mul(&u.inverse());
            }
            let i = (0..self.rank)
                .find(|&i| {
                    let img = self.reflect_root(i, &beta);
                    RootDatum::height(&img) < RootDatum::height(&beta)
                })
                .expect("a non-simple positive root has a descending reflection");
            beta = self.reflect_root(i, &beta);
            u = u.mul_simple(i);
        }
    }

    /// Number of affine hyperplanes {α = n} separating the fundamental alcove
    /// from its image. The interior point ρ^∨/h has α(ρ^∨/h) = ht(α)/h, and
    /// α(w(x + λ)) = β(x + λ) with β = w⁻¹α.
    pub fn affine_length(&self, x: &AffineWeylElement) -> usize {
        let h = self.coxeter_number;
        let winv = x.w.inverse();
        let mut total = 0i64;
        for alpha in &self.positive_roots {
            let beta = winv.act_root(alpha);
            let scaled = RootDatum::height(&beta) + h * self.pair(&beta, &x.lambda);
            total += floor_div(scaled, h).abs();
        }
        total as usize
    }

    /// Breadth-first word lengths of all affine elements up to `max_len`.
    pub fn affine_bfs(&self, max_len: usize) -> HashMap<AffineWeylElement, usize> {
        let gens = self.affine_generators();
        let e = self.translation(vec![0; self.rank]);
        let mut dist = HashMap::from([(e.clone(), 0usize)]);
        let mut queue = VecDeque::from([e]);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            if d == max_len {
                continue;
            }
            for g in &gens {
                let y = x.mul(g);
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Minimal in its coset x·W: ℓ(x s_i) > ℓ(x) for every finite s_i.
    pub fn is_waf_minus(&self, x: &AffineWeylElement) -> bool {
        let l = self.affine_length(x);
        (0..self.rank).all(|i| {
            let xs = AffineWeylElement::new(x.w.mul_simple(i), self.reflect_coweight(i, &x.lambda));
            self.affine_length(&xs) > l
        })
    }

    /// For α ∈ R_P⁺: w(α) > 0 ⇒ α(λ) = 0 and w(α) < 0 ⇒ α(λ) = −1.
    pub fn in_wp_af(&self, x: &AffineWeylElement, p: &ParabolicData) -> bool {
        p.r_p_plus.iter().all(|&k| {
            let alpha = &self.positive_roots[k];
            let pairing = self.pair(alpha, &x.lambda);
            let positive = x.w.act_root(alpha).iter().all(|&c| c >= 0);
            if positive {
                pairing == 0
            } else {
                pairing == -1
            }
        })
    }

    /// Elements of W_af^- of length at most `max_len`, sorted by length.
    pub fn waf_minus_elements(&self, max_len: usize) -> Vec<(AffineWeylElement, usize)> {
        let mut out: Vec<(AffineWeylElement, usize)> = self
            .affine_bfs(max_len)
            .into_iter()
            .filter(|(x, _)| self.is_waf_minus(x))
            .collect();
        out.sort_by(|(a, la), (b, lb)| {
            la.cmp(lb).then_with(|| a.lambda.cmp(&b.lambda)).then_with(|| a.w.word().cmp(b.w.word()))
        });
        out
    }

    /// Elements of W_af^- whose image under wt_λ ↦ w(λ) equals `mu`.
    pub fn waf_minus_preimages(&self, mu: &[i64]) -> Vec<AffineWeylElement> {
        self.weyl_group()
            .iter()
            .map(|w| AffineWeylElement::new(w.clone(), w.inverse().act_coweight(mu)))
            .filter(|x| self.is_waf_minus(x))
            .collect()
    }
}
