//! QH_T(ℙ¹) = ℚ[h, q, σ]/⟨σ² − 2hσ − q⟩ and the identities relating it to
//! the SL_2 presentations.

use polyalg::{
    IdealPresentation, LocalizedBasis, MonomialOrder, Poly, PolyRing, RationalFunction, DEFAULT_BUDGET,
};

use crate::error::Result;
use crate::peterson::{build_centralizer, build_yp, qloc};
use crate::rootdata::RootDatum;

#[derive(Clone, Debug)]
pub struct RankOneQH {
    /// Variables (s, h, q); s stands for σ.
    pub ring: PolyRing,
    pub basis: LocalizedBasis,
}

impl RankOneQH {
    pub fn new() -> Result<Self> {
        let ring = PolyRing::new(["s", "h", "q"])?.with_order(MonomialOrder::Block { first: 1 });
        let rel = ring.parse("s^2 - 2*h*s - q")?;
        let basis = IdealPresentation::new(ring.clone(), vec![rel]).groebner(DEFAULT_BUDGET)?;
        Ok(RankOneQH { ring, basis })
    }

    pub fn sigma(&self) -> Poly {
        self.ring.var("s")
    }

    pub fn reduce(&self, p: &Poly) -> Poly {
        self.basis.normal_form(p)
    }

    pub fn is_zero(&self, p: &Poly) -> bool {
        self.basis.contains(p)
    }

    /// Standard monomials over ℚ[h, q]: a free basis {1, s, …}.
    pub fn module_basis(&self) -> Option<Vec<String>> {
        let deg = self.basis.basis.quotient_dimension_over_parameters().finite()?;
        Some((0..deg).map(|k| if k == 0 { "1".to_string() } else { format!("s^{k}") }).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> RankOneCheck {
    RankOneCheck { name, passed, detail: detail.into() }
}

/// Evaluates a polynomial at rational-function values of its variables.
fn substitute(p: &Poly, images: &[RationalFunction], nvars: usize) -> RationalFunction {
    let mut acc = RationalFunction::from_poly(Poly::zero(nvars));
    for (m, c) in p.terms() {
        let mut term = RationalFunction::from_poly(Poly::constant(nvars, c.clone()));
        for (v, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                term = &term * &images[v].powi(e as i32);
            }
        }
        acc = &acc + &term;
    }
    acc
}

/// Every identity of the rank-one example, exactly.
pub fn rank_one_verify() -> Result<Vec<RankOneCheck>> {
    let qh = RankOneQH::new()?;
    let n = qh.ring.nvars();
    let (s, h, q) = (qh.ring.var("s"), qh.ring.var("h"), qh.ring.var("q"));
    let mut out = Vec::new();

    let a1 = RootDatum::parse("A", 1)?;
    let yp = build_yp(&a1, &a1.borel(), true)?;
    let yr = yp.ring().clone();
    let y_basis = yp.ideal.groebner(DEFAULT_BUDGET)?;
    // Φ: (x, h, q) ↦ (−σ, h, q) and back
    let phi = |f: &Poly| -> Poly {
        let vals: Vec<Option<Poly>> = vec![Some(-&s), Some(h.clone()), Some(q.clone())];
        f.embed(&[0, 1, 2], n).substitute(&vals)
    };
    let psi = |f: &Poly| -> Poly {
        let x = yr.var("x_1");
        let vals: Vec<Option<Poly>> = vec![Some(-&x), Some(yr.var("h_1")), Some(yr.var("q_1"))];
        f.embed(&[0, 1, 2], yr.nvars()).substitute(&vals)
    };
    let forward = yp.ideal.generators.iter().all(|g| qh.is_zero(&phi(g)));
    let backward = qh.basis.basis.polys().iter().all(|g| y_basis.contains(&psi(g)));
    let bases = qh.module_basis() == Some(vec!["1".into(), "s^1".into()])
        && y_basis.basis.quotient_dimension_over_parameters().finite() == Some(2);
    out.push(check(
        "isomorphism y_- -> -sigma",
        forward && backward && bases,
        format!("relations preserved: {forward}/{backward}; bases {{1, y}} -> {{1, -s}}: {bases}"),
    ));

    let image = phi(&yp.qbar[0]);
    out.push(check(
        "Phi(qbar) = q",
        qh.is_zero(&(&image - &q)),
        format!("Phi(qbar) = {} reduces to {}", qh.ring.format(&image), qh.ring.format(&qh.reduce(&image))),
    ));

    // σ·q⁻¹(σ − 2h) = 1 ⇔ σ(σ − 2h) − q = 0
    let inv_num = &s - &(&h * &Poly::from_int(n, 2));
    out.push(check(
        "sigma invertible once q is",
        qh.is_zero(&(&(&s * &inv_num) - &q)),
        "sigma^-1 = q^-1 (sigma - 2h)",
    ));

    // Φ_loc: y_+ ↦ σ⁻¹ and z ↦ (1 − 2hσ⁻¹)⁻¹ = σ/(σ − 2h)
    let loc = qloc(&a1, &a1.borel(), true)?;
    let cr = loc.centralizer.ring();
    let mut images = vec![RationalFunction::from_poly(Poly::zero(n)); cr.nvars()];
    images[cr.index_of("y_1").unwrap()] = RationalFunction::new(Poly::one(n), s.clone());
    images[cr.index_of("z_1").unwrap()] = RationalFunction::new(s.clone(), inv_num.clone());
    images[cr.index_of("h_1").unwrap()] = RationalFunction::from_poly(h.clone());
    let value = &loc.values[0];
    let num = substitute(value.numerator(), &images, n);
    let den = substitute(value.denominator(), &images, n);
    let ratio = &num / &den;
    // ratio = A/B with B a product of σ and σ − 2h, both units in QH[q⁻¹]
    let diff = &ratio.numerator().clone() - &(&q * ratio.denominator());
    out.push(check(
        "Phi_loc(qbar_loc) = q",
        qh.is_zero(&diff),
        format!("Phi_loc(qbar_loc) = ({}) / ({})", qh.ring.format(ratio.numerator()), qh.ring.format(ratio.denominator())),
    ));

    let cent = build_centralizer(&a1, true)?;
    let cring = cent.ring().clone();
    let expected = IdealPresentation::new(cring.clone(), vec![cring.parse("z_1*(1 - 2*h_1*y_1) - 1")?])
        .with_inverted(vec![cring.var("z_1")]);
    let same = cent.ideal.groebner(DEFAULT_BUDGET)?.basis.polys() == expected.groebner(DEFAULT_BUDGET)?.basis.polys();
    out.push(check(
        "centralizer ring = Q[h, y_+, (1 - 2h y_+)^-1]",
        same,
        "ideal equals <z(1 - 2h y_+) - 1> with z a unit",
    ));

    // h = 0: q = σ², so inverting σ inverts q
    let flat = PolyRing::new(["s", "w", "q"])?;
    let rels = vec![flat.parse("s^2 - q")?, flat.parse("s*w - 1")?];
    let flat_basis = IdealPresentation::new(flat.clone(), rels).groebner(DEFAULT_BUDGET)?;
    out.push(check(
        "h = 0 makes q invertible",
        flat_basis.contains(&flat.parse("q*w^2 - 1")?),
        "q * (sigma^-1)^2 = 1",
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass() {
        for c in rank_one_verify().unwrap() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
