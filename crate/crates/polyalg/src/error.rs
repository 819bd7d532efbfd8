use thiserror::Error;

/// Work done by a Gröbner computation before it stopped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BudgetStats {
    pub pairs_reduced: usize,
    pub pairs_pending: usize,
    pub basis_size: usize,
}

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("Gröbner budget of {budget} pair reductions exceeded ({} reduced, {} pending, basis size {})",
        stats.pairs_reduced, stats.pairs_pending, stats.basis_size)]
    BudgetExceeded { budget: usize, stats: BudgetStats },
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("polynomial belongs to a ring with {found} variables, expected {expected}")]
    RingMismatch { expected: usize, found: usize },
}
