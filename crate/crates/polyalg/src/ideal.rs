use std::fmt;

use crate::error::PolyError;
use crate::groebner::{groebner_basis, GroebnerBasis};
use crate::monomial::MonomialOrder;
use crate::poly::{Poly, Q};
use crate::ring::{PolyRing, Variable};

/// Vector-space dimension of a quotient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuotientDimension {
    Finite(usize),
    Infinite,
}

impl QuotientDimension {
    pub fn finite(self) -> Option<usize> {
        match self {
            QuotientDimension::Finite(n) => Some(n),
            QuotientDimension::Infinite => None,
        }
    }
}

impl fmt::Display for QuotientDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientDimension::Finite(n) => write!(f, "{n}"),
            QuotientDimension::Infinite => write!(f, "infinite"),
        }
    }
}

/// The ring ℚ[vars, f⁻¹ : f ∈ inverted] / ⟨generators⟩.
///
/// Inverted elements are handled by Rabinowitsch variables: one fresh
/// variable `w` per inverted `f` together with the generator `f·w − 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealPresentation {
    pub ring: PolyRing,
    pub generators: Vec<Poly>,
    pub inverted: Vec<Poly>,
}

impl IdealPresentation {
    pub fn new(ring: PolyRing, generators: Vec<Poly>) -> Self {
        for g in &generators {
            assert_eq!(g.nvars(), ring.nvars(), "generator outside the ring");
        }
        IdealPresentation { ring, generators, inverted: Vec::new() }
    }

    pub fn with_inverted(mut self, inverted: Vec<Poly>) -> Self {
        for f in &inverted {
            assert_eq!(f.nvars(), self.ring.nvars(), "inverted element outside the ring");
        }
        self.inverted.extend(inverted);
        self
    }

    pub fn push_generator(&mut self, g: Poly) {
        assert_eq!(g.nvars(), self.ring.nvars(), "generator outside the ring");
        self.generators.push(g);
    }

    fn aux_names(&self) -> Vec<String> {
        let mut names = Vec::with_capacity(self.inverted.len());
        let mut k = 0usize;
        while names.len() < self.inverted.len() {
            k += 1;
            let name = format!("w_{k}");
            if self.ring.index_of(&name).is_none() {
                names.push(name);
            }
        }
        names
    }

    /// Polynomial ring with one Rabinowitsch variable per inverted element,
    /// the full generator list there, and the embedding of the original
    /// variables. For a block order the auxiliary variables join the first
    /// block.
    pub fn rabinowitsch(&self) -> (PolyRing, Vec<Poly>, Vec<usize>) {
        let n = self.ring.nvars();
        let m = self.inverted.len();
        let names = self.aux_names();
        let (split, order) = match self.ring.order() {
            MonomialOrder::Block { first } => (first, MonomialOrder::Block { first: first + m }),
            o => (n, o),
        };
        let old: Vec<Variable> = self.ring.variables().to_vec();
        let mut vars: Vec<Variable> = old[..split].to_vec();
        vars.extend(names.into_iter().map(|name| Variable { name, weight: None }));
        vars.extend(old[split..].iter().cloned());
        let ring = PolyRing::from_variables(vars, order).expect("auxiliary names are fresh");
        let map: Vec<usize> = (0..n).map(|i| if i < split { i } else { i + m }).collect();
        let total = n + m;
        let mut gens: Vec<Poly> = self.generators.iter().map(|g| g.embed(&map, total)).collect();
        for (k, f) in self.inverted.iter().enumerate() {
            let w = Poly::var(total, split + k);
            gens.push(&(&f.embed(&map, total) * &w) - &Poly::one(total));
        }
        (ring, gens, map)
    }

    /// Gröbner basis of the Rabinowitsch ideal in the given order.
    pub fn groebner_with(&self, order: MonomialOrder, budget: usize) -> Result<LocalizedBasis, PolyError> {
        let (ring, gens, map) = self.with_order(order).rabinowitsch();
        let basis = groebner_basis(&gens, ring.nvars(), ring.order(), budget)?;
        Ok(LocalizedBasis { ring, basis, map })
    }

    pub fn groebner(&self, budget: usize) -> Result<LocalizedBasis, PolyError> {
        self.groebner_with(self.ring.order(), budget)
    }

    pub fn quotient_dimension(&self, budget: usize) -> Result<QuotientDimension, PolyError> {
        Ok(self.groebner(budget)?.basis.quotient_dimension())
    }

    pub fn with_order(&self, order: MonomialOrder) -> IdealPresentation {
        IdealPresentation {
            ring: self.ring.with_order(order),
            generators: self.generators.clone(),
            inverted: self.inverted.clone(),
        }
    }

    /// Substitutes rational values for the named variables and removes them
    /// from the ring. Generators that become zero are dropped.
    pub fn specialize(&self, assignment: &[(&str, Q)]) -> Result<IdealPresentation, PolyError> {
        let mut idx: Vec<(usize, Q)> = Vec::with_capacity(assignment.len());
        for (name, value) in assignment {
            let i = self
                .ring
                .index_of(name)
                .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
            idx.push((i, value.clone()));
        }
        let removed: Vec<usize> = idx.iter().map(|(i, _)| *i).collect();
        let ring = self.ring.without(&removed);
        let generators = self
            .generators
            .iter()
            .map(|g| g.specialize(&idx))
            .filter(|g| !g.is_zero())
            .collect();
        let inverted = self.inverted.iter().map(|f| f.specialize(&idx)).collect();
        Ok(IdealPresentation { ring, generators, inverted })
    }
}

/// Gröbner basis of a localized ideal, with the embedding of the original
/// ring into the Rabinowitsch ring.
#[derive(Clone, Debug)]
pub struct LocalizedBasis {
    pub ring: PolyRing,
    pub basis: GroebnerBasis,
    map: Vec<usize>,
}

impl LocalizedBasis {
    pub fn embed(&self, f: &Poly) -> Poly {
        f.embed(&self.map, self.ring.nvars())
    }

    /// Normal form of an element of the original ring, in the extended ring.
    pub fn normal_form(&self, f: &Poly) -> Poly {
        self.basis.normal_form(&self.embed(f))
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.is_unit_ideal()
    }

    pub fn quotient_dimension(&self) -> QuotientDimension {
        self.basis.quotient_dimension()
    }
}

/// The common weight of all monomials of `p`, if there is one. The zero
/// polynomial is homogeneous of every weight and reports 0.
pub fn is_weighted_homogeneous(p: &Poly, weights: &[i64]) -> Option<i64> {
    p.weighted_degree(weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::DEFAULT_BUDGET;
    use crate::poly::q;

    fn ideal(names: &[&str], gens: &[&str]) -> IdealPresentation {
        let ring = PolyRing::new(names.iter().copied()).unwrap();
        let gens = gens.iter().map(|s| ring.parse(s).unwrap()).collect();
        IdealPresentation::new(ring, gens)
    }

    #[test]
    fn specialization_examples() {
        let i = ideal(&["h", "q", "y"], &["y^2 + 2*h*y - q"]);
        let s = i.specialize(&[("h", q(0, 1)), ("q", q(0, 1))]).unwrap();
        assert_eq!(s.ring.names().collect::<Vec<_>>(), vec!["y"]);
        assert_eq!(s.generators, vec![s.ring.parse("y^2").unwrap()]);
        assert_eq!(s.quotient_dimension(DEFAULT_BUDGET).unwrap(), QuotientDimension::Finite(2));

        let e = ideal(&["h", "y"], &[]);
        assert!(e.specialize(&[("h", q(3, 1))]).unwrap().generators.is_empty());

        let u = ideal(&["h", "y"], &["h*y - 1"]).specialize(&[("h", q(0, 1))]).unwrap();
        assert!(u.groebner(DEFAULT_BUDGET).unwrap().is_unit_ideal());
    }

    #[test]
    fn quadratic_with_generic_h() {
        let i = ideal(&["h", "y"], &["y^2 + 2*h*y"]).specialize(&[("h", q(5, 7))]).unwrap();
        assert_eq!(i.quotient_dimension(DEFAULT_BUDGET).unwrap(), QuotientDimension::Finite(2));
    }

    #[test]
    fn localization_matches_saturation() {
        // ⟨x(x-1)⟩ localized at x is ℚ[x]/⟨x-1⟩
        let i = ideal(&["x"], &["x^2 - x"]);
        let x = i.ring.var("x");
        let loc = i.clone().with_inverted(vec![x]);
        assert_eq!(loc.quotient_dimension(DEFAULT_BUDGET).unwrap(), QuotientDimension::Finite(1));
        let sat = ideal(&["x"], &["x - 1"]);
        assert_eq!(sat.quotient_dimension(DEFAULT_BUDGET).unwrap(), QuotientDimension::Finite(1));
        let gb = loc.groebner(DEFAULT_BUDGET).unwrap();
        assert!(gb.contains(&i.ring.parse("x - 1").unwrap()));
    }

    #[test]
    fn auxiliary_names_avoid_collisions() {
        let i = ideal(&["w_1", "x"], &[]).with_inverted(vec![PolyRing::new(["w_1", "x"]).unwrap().var("x")]);
        let (ring, gens, _) = i.rabinowitsch();
        assert_eq!(ring.names().collect::<Vec<_>>(), vec!["w_1", "x", "w_2"]);
        assert_eq!(ring.format(&gens[0]), "x*w_2 - 1");
    }

    #[test]
    fn homogeneity_examples() {
        let ring = PolyRing::new(["y", "h"]).unwrap();
        let w = [2, 2];
        assert_eq!(is_weighted_homogeneous(&ring.parse("y^2 + 2*h*y").unwrap(), &w), Some(4));
        assert_eq!(is_weighted_homogeneous(&ring.parse("y^2 + h").unwrap(), &w), None);
        assert_eq!(is_weighted_homogeneous(&ring.one(), &w), Some(0));
    }
}
