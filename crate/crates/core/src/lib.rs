//! Exact computational algebraic geometry for cubic fourfolds in P^5.

pub mod catalog;
pub mod cli;
pub mod construct;
pub mod error;
pub mod fixtures;
pub mod geometry;
pub mod groebner;
pub mod idealops;
pub mod lattice;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod scalar;
pub mod verify;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
