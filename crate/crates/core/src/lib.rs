//! Reduced words, heaps, justified tableaux and the braid statistics that
//! connect them, with exhaustive checkers for the identities between them.

#[cfg(feature = "cli")]
pub mod cli;
pub mod error;
pub mod fraction;
pub mod heaps;
pub mod homomesy;
pub mod posets;
pub mod tableaux;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use fraction::Fraction;
