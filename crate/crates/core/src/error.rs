use std::fmt;

use thiserror::Error;

/// Why a bounded procedure could not give an exact answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnknownReason {
    BudgetExhausted,
    NotImplemented,
}

impl fmt::Display for UnknownReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnknownReason::BudgetExhausted => write!(f, "budget-exhausted"),
            UnknownReason::NotImplemented => write!(f, "not-implemented"),
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum Error {
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("resource budget exceeded: {0}")]
    Resource(String),
    #[error("{0} requires prime characteristic")]
    CharacteristicZero(&'static str),
    #[error("ideal is not monomial: {0}")]
    NotMonomial(String),
    #[error("ring is not finite: {0}")]
    NotFinite(String),
    #[error("undecided ({0})")]
    Undecided(UnknownReason),
    #[error("invalid ring map: {0}")]
    InvalidMap(String),
    #[error("{0} is a zerodivisor")]
    ZeroDivisor(String),
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    /// True for errors that mean "no exact answer within the budget" rather
    /// than bad input or an aborted computation.
    pub fn is_undecided(&self) -> bool {
        matches!(self, Error::Undecided(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
