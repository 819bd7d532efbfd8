use polyalg::{IdealPresentation, MonomialOrder, Poly, PolyError, QuotientDimension, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{SchemePresentation, VariableRole};
use crate::error::{Error, Result};

fn zero_parameters(pres: &SchemePresentation) -> Result<IdealPresentation> {
    let names = pres.parameter_names();
    let assignment: Vec<(&str, Q)> = names.iter().map(|n| (n.as_str(), Q::from_integer(0.into()))).collect();
    Ok(pres.ideal.specialize(&assignment)?)
}

/// (dim of the fiber over h = q = 0, every cell coordinate nilpotent there).
pub fn fiber_analysis(pres: &SchemePresentation, budget: usize) -> Result<(usize, bool)> {
    let fiber = zero_parameters(pres)?.with_order(MonomialOrder::Grevlex);
    let dim = match fiber.quotient_dimension(budget)? {
        QuotientDimension::Finite(d) => d,
        QuotientDimension::Infinite => {
            return Err(Error::Structural("fiber over the origin is not zero-dimensional".into()))
        }
    };
    let mut nilpotent = true;
    for i in 0..fiber.ring.nvars() {
        // x nilpotent ⇔ 1 ∈ I + ⟨x·w − 1⟩
        let x = Poly::var(fiber.ring.nvars(), i);
        let mut inverted = fiber.inverted.clone();
        inverted.push(x);
        let test = IdealPresentation::new(fiber.ring.clone(), fiber.generators.clone()).with_inverted(inverted);
        if !test.groebner(budget)?.is_unit_ideal() {
            nilpotent = false;
            break;
        }
    }
    Ok((dim, nilpotent))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub seeds: Vec<u64>,
    pub specialized: Vec<usize>,
    /// Dimension over Frac S, when the symbolic computation fit the budget.
    pub symbolic: Option<usize>,
}

impl RankReport {
    pub fn rank(&self) -> usize {
        self.specialized[0]
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Q {
    let mut num = 0i64;
    while num == 0 {
        num = rng.gen_range(-97..=97);
    }
    let den: i64 = rng.gen_range(1..=31);
    Q::new(num.into(), den.into())
}

/// Rank of 𝒪 over Frac S, by random specialization of (h, q) for every seed
/// plus an attempt over the rational function field.
pub fn generic_rank(pres: &SchemePresentation, seeds: &[u64], budget: usize) -> Result<RankReport> {
    if seeds.is_empty() {
        return Err(Error::Config("generic_rank needs at least one seed".into()));
    }
    let names = pres.parameter_names();
    let mut specialized = Vec::with_capacity(seeds.len());
    for &seed in seeds {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values: Vec<Q> = names.iter().map(|_| random_rational(&mut rng)).collect();
        let assignment: Vec<(&str, Q)> = names.iter().map(|n| n.as_str()).zip(values).collect();
        let ideal = pres.ideal.specialize(&assignment)?.with_order(MonomialOrder::Grevlex);
        match ideal.quotient_dimension(budget)? {
            QuotientDimension::Finite(d) => specialized.push(d),
            QuotientDimension::Infinite => {
                return Err(Error::Structural(format!("seed {seed}: specialized fiber is not finite")))
            }
        }
    }
    if specialized.iter().any(|&d| d != specialized[0]) {
        return Err(Error::Structural(format!("seed disagreement: {seeds:?} gave {specialized:?}")));
    }
    let first = pres.roles.iter().filter(|r| **r == VariableRole::Cell).count();
    let symbolic = match pres.ideal.groebner_with(MonomialOrder::Block { first }, budget) {
        Ok(lb) => lb.basis.quotient_dimension_over_parameters().finite(),
        Err(PolyError::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    if let Some(s) = symbolic {
        if s != specialized[0] {
            return Err(Error::Structural(format!(
                "symbolic rank {s} differs from specialized rank {}",
                specialized[0]
            )));
        }
    }
    Ok(RankReport { seeds: seeds.to_vec(), specialized, symbolic })
}

/// normal_form(q̄_i − 1) = 0 for every Levi index i.
pub fn levi_qbar_is_one(pres: &SchemePresentation, budget: usize) -> Result<Vec<(usize, bool)>> {
    let basis = pres.ideal.groebner_with(MonomialOrder::Grevlex, budget)?;
    let n = pres.ring().nvars();
    Ok(pres
        .parabolic
        .levi
        .iter()
        .map(|&i| (i, basis.normal_form(&(&pres.qbar[i] - &Poly::one(n))).is_zero()))
        .collect())
}
