use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::monomial::{Monomial, MonomialOrder};

/// Exact rational scalar.
pub type Q = BigRational;

/// Sparse polynomial with rational coefficients in a fixed number of
/// variables. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, Q::from_integer(BigInt::from(c)))
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range for {nvars} variables");
        Self::monomial(Monomial::var(nvars, index), Q::one())
    }

    pub fn monomial(m: Monomial, c: Q) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars);
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// The constant value if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Largest exponent of variable `v` occurring in the polynomial.
    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.exponents()[v]).max().unwrap_or(0)
    }

    pub fn uses_var(&self, v: usize) -> bool {
        self.degree_in(v) > 0
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Q)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Terms sorted in decreasing order for `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Monomial, Q)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    /// The common weighted degree of all terms, or `None` if the polynomial is
    /// not weighted-homogeneous. The zero polynomial has no degree and counts
    /// as homogeneous of every weight; `Some(0)` is returned for it.
    pub fn weighted_degree(&self, weights: &[i64]) -> Option<i64> {
        let mut degs = self.terms.keys().map(|m| m.weighted_degree(weights));
        let first = match degs.next() {
            Some(d) => d,
            None => return Some(0),
        };
        degs.all(|d| d == first).then_some(first)
    }

    /// Substitutes `values[i]` for every variable `i` with a `Some` entry.
    /// The result lives in the same ring.
    pub fn substitute(&self, values: &[Option<Poly>]) -> Poly {
        assert_eq!(values.len(), self.nvars);
        let mut out = Poly::zero(self.nvars);
        let mut cache: Vec<Vec<Poly>> = vec![Vec::new(); self.nvars];
        for (m, c) in &self.terms {
            let mut kept = m.exponents().to_vec();
            let mut factor = Poly::constant(self.nvars, c.clone());
            for (v, val) in values.iter().enumerate() {
                let e = m.exponents()[v] as usize;
                if let (Some(val), true) = (val, e > 0) {
                    kept[v] = 0;
                    let powers = &mut cache[v];
                    if powers.is_empty() {
                        powers.push(Poly::one(self.nvars));
                    }
                    while powers.len() <= e {
                        let next = powers.last().unwrap() * val;
                        powers.push(next);
                    }
                    factor = &factor * &powers[e];
                }
            }
            let term = factor.mul_monomial(&Monomial::from_exponents(kept), &Q::one());
            out = out + term;
        }
        out
    }

    /// Evaluates the variables listed in `assignment` and removes them from
    /// the ring. Variables keep their relative order.
    pub fn specialize(&self, assignment: &[(usize, Q)]) -> Poly {
        let mut values: Vec<Option<Q>> = vec![None; self.nvars];
        for (v, q) in assignment {
            values[*v] = Some(q.clone());
        }
        let keep: Vec<bool> = values.iter().map(Option::is_none).collect();
        let new_nvars = keep.iter().filter(|k| **k).count();
        let mut out = Poly::zero(new_nvars);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            for (v, val) in values.iter().enumerate() {
                if let Some(q) = val {
                    let e = m.exponents()[v];
                    if e > 0 {
                        coeff *= num_traits::pow::pow(q.clone(), e as usize);
                    }
                }
            }
            out.add_term(m.project(&keep), coeff);
        }
        out
    }

    /// Evaluates every variable at a rational point.
    pub fn evaluate(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.nvars);
        let assignment: Vec<(usize, Q)> = point.iter().cloned().enumerate().collect();
        self.specialize(&assignment).as_constant().unwrap()
    }

    /// Re-embeds the polynomial into a ring with `new_nvars` variables, sending
    /// variable `i` to variable `map[i]`.
    pub fn embed(&self, map: &[usize], new_nvars: usize) -> Poly {
        assert_eq!(map.len(), self.nvars);
        let mut out = Poly::zero(new_nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; new_nvars];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(Monomial::from_exponents(e), c.clone());
        }
        out
    }

    /// Appends `extra` unused variables at the end.
    pub fn extend_vars(&self, extra: usize) -> Poly {
        Poly {
            nvars: self.nvars + extra,
            terms: self.terms.iter().map(|(m, c)| (m.extend(extra), c.clone())).collect(),
        }
    }

    pub fn derivative(&self, v: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[v];
            if e > 0 {
                let mut ex = m.exponents().to_vec();
                ex[v] -= 1;
                out.add_term(Monomial::from_exponents(ex), c * Q::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Scales to a primitive integer polynomial whose leading coefficient
    /// (for `order`) is positive. Generates the same ideal.
    pub fn primitive(&self, order: MonomialOrder) -> Poly {
        let Some((_, lc)) = self.leading_term(order) else {
            return self.clone();
        };
        let den_lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num_gcd = self
            .terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&den_lcm / c.denom()))));
        let mut factor = Q::new(den_lcm, num_gcd);
        if lc.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Makes the leading coefficient one.
    pub fn monic(&self, order: MonomialOrder) -> Poly {
        match self.leading_term(order) {
            Some((_, lc)) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "adding polynomials from different rings");
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "adding polynomials from different rings");
        if self.terms.len() < rhs.terms.len() {
            return rhs + self;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "subtracting polynomials from different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "multiplying polynomials from different rings");
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -self.clone()
    }
}

/// Convenience constructor for small rationals.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly {
        Poly::var(3, i)
    }

    #[test]
    fn arithmetic_cancels() {
        let p = &(&x(0) + &x(1)) * &(&x(0) - &x(1));
        let expected = &x(0).pow(2) - &x(1).pow(2);
        assert_eq!(p, expected);
        assert!((&p - &expected).is_zero());
    }

    #[test]
    fn specialize_drops_variables() {
        // y^2 + 2hy - q with h = 0, q = 0 → y^2 in one variable
        let (y, h, qv) = (x(0), x(1), x(2));
        let p = &(&y.pow(2) + &(&h * &y).scale(&q(2, 1))) - &qv;
        let s = p.specialize(&[(1, q(0, 1)), (2, q(0, 1))]);
        assert_eq!(s.nvars(), 1);
        assert_eq!(s, Poly::var(1, 0).pow(2));
    }

    #[test]
    fn weighted_degree_detects_inhomogeneity() {
        let w = [2, 2, 4];
        let p = &x(0).pow(2) + &(&x(1) * &x(0)).scale(&q(2, 1));
        assert_eq!(p.weighted_degree(&w), Some(4));
        let r = &x(0).pow(2) + &x(1);
        assert_eq!(r.weighted_degree(&w), None);
        assert_eq!(Poly::one(3).weighted_degree(&w), Some(0));
    }

    #[test]
    fn primitive_clears_denominators() {
        let p = &x(0).scale(&q(1, 2)) - &x(1).scale(&q(3, 4));
        let pr = p.primitive(MonomialOrder::Grevlex);
        assert_eq!(pr, &x(0).scale(&q(2, 1)) - &x(1).scale(&q(3, 1)));
    }

    #[test]
    fn substitute_composes() {
        // x0 ↦ x1 + 1 in x0^2
        let p = x(0).pow(2);
        let s = p.substitute(&[Some(&x(1) + &Poly::one(3)), None, None]);
        assert_eq!(s, &(&x(1).pow(2) + &x(1).scale(&q(2, 1))) + &Poly::one(3));
    }
}
