use std::fmt::Write;

use num_traits::{One, Signed};

use crate::error::PolyError;
use crate::monomial::MonomialOrder;
use crate::parse;
use crate::poly::{Poly, Q};

/// A named ring variable with an optional integer grading weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub weight: Option<i64>,
}

/// ℚ[x_0, …, x_{n-1}] with named variables and a monomial order used for
/// printing and as the default Gröbner order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<Variable>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, PolyError> {
        let vars = names
            .into_iter()
            .map(|n| Variable { name: n.into(), weight: None })
            .collect();
        Self::from_variables(vars, MonomialOrder::Grevlex)
    }

    pub fn from_variables(vars: Vec<Variable>, order: MonomialOrder) -> Result<Self, PolyError> {
        for (i, v) in vars.iter().enumerate() {
            if !parse::is_identifier(&v.name) {
                return Err(PolyError::InvalidVariableName(v.name.clone()));
            }
            if vars[..i].iter().any(|w| w.name == v.name) {
                return Err(PolyError::DuplicateVariable(v.name.clone()));
            }
        }
        Ok(PolyRing { vars, order })
    }

    pub fn with_order(&self, order: MonomialOrder) -> PolyRing {
        PolyRing { vars: self.vars.clone(), order }
    }

    pub fn with_weights(&self, weights: &[i64]) -> PolyRing {
        assert_eq!(weights.len(), self.vars.len());
        let vars = self
            .vars
            .iter()
            .zip(weights)
            .map(|(v, &w)| Variable { name: v.name.clone(), weight: Some(w) })
            .collect();
        PolyRing { vars, order: self.order }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.vars.iter().map(|v| v.name.as_str())
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    /// The variable called `name`. Panics if absent.
    pub fn var(&self, name: &str) -> Poly {
        let i = self
            .index_of(name)
            .unwrap_or_else(|| panic!("no variable named {name}"));
        Poly::var(self.nvars(), i)
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(self.nvars())
    }

    pub fn one(&self) -> Poly {
        Poly::one(self.nvars())
    }

    pub fn constant(&self, c: Q) -> Poly {
        Poly::constant(self.nvars(), c)
    }

    /// Weights of all variables, if every variable is weighted.
    pub fn weights(&self) -> Option<Vec<i64>> {
        self.vars.iter().map(|v| v.weight).collect()
    }

    /// Appends variables at the end of the variable list.
    pub fn extended(&self, extra: impl IntoIterator<Item = Variable>) -> Result<PolyRing, PolyError> {
        let mut vars = self.vars.clone();
        vars.extend(extra);
        Self::from_variables(vars, self.order)
    }

    /// Ring with the listed variables removed.
    pub fn without(&self, removed: &[usize]) -> PolyRing {
        let vars = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed.contains(i))
            .map(|(_, v)| v.clone())
            .collect();
        let order = match self.order {
            MonomialOrder::Block { first } => {
                let gone = removed.iter().filter(|&&i| i < first).count();
                MonomialOrder::Block { first: first - gone }
            }
            o => o,
        };
        PolyRing { vars, order }
    }

    pub fn parse(&self, text: &str) -> Result<Poly, PolyError> {
        parse::parse_poly(self, text)
    }

    /// Canonical text: terms in decreasing order for the ring's monomial
    /// order, `*` between factors, `^` for powers, exact rational
    /// coefficients.
    pub fn format(&self, p: &Poly) -> String {
        assert_eq!(p.nvars(), self.nvars(), "polynomial does not belong to this ring");
        let terms = p.sorted_terms(self.order);
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(if abs.is_integer() {
                    abs.numer().to_string()
                } else {
                    format!("{}/{}", abs.numer(), abs.denom())
                });
            }
            for (v, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[v].name.clone()),
                    _ => factors.push(format!("{}^{}", self.vars[v].name, e)),
                }
            }
            write!(out, "{}", factors.join("*")).unwrap();
        }
        out
    }

    /// Canonical text of the primitive integer multiple of `p` (same ideal).
    pub fn format_primitive(&self, p: &Poly) -> String {
        self.format(&p.primitive(self.order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    #[test]
    fn formats_rank_one_qbar() {
        let ring = PolyRing::new(["x_1", "h_1"]).unwrap();
        let (y, h) = (ring.var("x_1"), ring.var("h_1"));
        let qbar = &y.pow(2) + &(&h * &y).scale(&q(2, 1));
        assert_eq!(ring.format(&qbar), "x_1^2 + 2*x_1*h_1");
        assert_eq!(ring.format(&(-&qbar)), "-x_1^2 - 2*x_1*h_1");
        assert_eq!(ring.format(&ring.zero()), "0");
        assert_eq!(ring.format(&ring.constant(q(-1, 2))), "-1/2");
    }

    #[test]
    fn rejects_duplicates() {
        assert!(matches!(PolyRing::new(["a", "a"]), Err(PolyError::DuplicateVariable(_))));
        assert!(matches!(PolyRing::new(["a b"]), Err(PolyError::InvalidVariableName(_))));
    }
}
