//! Exact multivariate polynomial algebra over ℚ.
//!
//! The crate provides sparse polynomials with arbitrary-precision rational
//! coefficients, monomial orders (grevlex, lex and a two-block elimination
//! order), reduced Gröbner bases with an explicit work budget, normal forms,
//! quotient-ring dimensions, localization through auxiliary inverse
//! variables, and weighted-homogeneity checks.

mod error;
mod groebner;
mod ideal;
mod matrix;
mod monomial;
mod parse;
mod poly;
mod ratfunc;
mod ring;

pub use error::{BudgetStats, PolyError};
pub use groebner::{groebner_basis, GroebnerBasis, DEFAULT_BUDGET};
pub use ideal::{IdealPresentation, QuotientDimension};
pub use matrix::{determinant, PolyMatrix};
pub use monomial::{Monomial, MonomialOrder};
pub use ideal::{is_weighted_homogeneous, LocalizedBasis};
pub use poly::{q, Poly, Q};
pub use ratfunc::RationalFunction;
pub use ring::{PolyRing, Variable};
