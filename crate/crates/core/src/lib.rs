pub mod cli;
pub mod closure;
pub mod error;
pub mod finite;
pub mod groebner;
pub mod poly;
pub mod reductions;
pub mod standard;

pub use error::{Error, Result, UnknownReason};
