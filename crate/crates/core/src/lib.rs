//! Heegaard Floer correction terms of rational surgeries on knots in `S³`,
//! computed both in closed form and from a truncated mapping cone, together
//! with Dedekind sums, Casson–Walker and Casson–Gordon invariants, and an
//! obstruction pipeline for purely cosmetic surgeries.

pub mod arith;
pub mod classical;
pub mod cli;
pub mod cone;
pub mod cosmetic;
pub mod error;
pub mod io;
pub mod knot;
pub mod lens;

pub use error::{Error, Result};
