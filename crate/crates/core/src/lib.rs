//! Socle filtrations, simple-constituent multiplicities and composition
//! lengths for tensor modules restricted to Mackey Lie algebras.
//!
//! The combinatorial side ([`symfunc`], [`socle`]) works in the ring of
//! symmetric functions; [`finrank`] and [`brute`] check it against explicit
//! finite-rank `gl(N)` modules computed in exact rational arithmetic.

pub mod brute;
pub mod error;
pub mod finrank;
pub mod linalg;
pub mod partition;
pub mod socle;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use partition::Partition;
