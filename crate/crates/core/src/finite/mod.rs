//! Finite Artinian rings: materialization, ideal lattices and exhaustive checks.

mod cw;
mod lab;
mod lattice;
pub mod linalg;
mod ring;

pub use cw::Cw;
pub use lab::{closed_census, exhaustive_check, family_check, persistence_check, Census, Record};
pub use lattice::{IdealLattice, DEFAULT_MAX_IDEALS};
pub use linalg::Subspace;
pub use ring::{FiniteRing, DEFAULT_MAX_ELEMENTS};
