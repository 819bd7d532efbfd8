use polyalg::PolyError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid user input: type/rank pair, parabolic indices, and so on.
    #[error("configuration error: {0}")]
    Config(String),
    /// An operation was called outside its domain.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A computation produced something structurally impossible.
    #[error("structural error: {0}")]
    Structural(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub type Result<T> = std::result::Result<T, Error>;
