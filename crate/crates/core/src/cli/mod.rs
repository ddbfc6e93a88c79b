//! The session language: parsing, printing and batch execution.

pub mod ast;
mod parser;
mod printer;
mod runner;
mod selftest;

pub use ast::Session;
pub use parser::parse_session;
pub use runner::{run_session, run_text, CommandRecord, RunOptions, RunOutcome};
pub use selftest::{selftest, SelftestReport, SESSIONS};
