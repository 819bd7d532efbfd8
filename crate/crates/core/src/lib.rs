//! Root data, Chevalley algebras and polynomial presentations of Peterson
//! schemes, with the verification routines that exercise them.

pub mod error;
pub mod peterson;
pub mod pls;
pub mod chevalley;
pub mod rootdata;
pub mod verify;

pub use error::{Error, Result};
