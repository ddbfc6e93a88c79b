//! Closure operations on ideals: the uniform abstraction, the axiom and
//! property checkers, and combinators that build new closures from old ones.

mod check;
mod construct;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

pub use check::{
    check_axioms, check_basics, compare, hash_property_check, is_nonzerodivisor, semiprime_check, star_check,
    CheckReport, Comparison, Order, Status, Violation,
};
pub use construct::{Contraction, DirectedUnion, FiniteType, IdempotentHull, Intersection, ModuleClosure};

use crate::error::{Error, Result, UnknownReason};
use crate::groebner::{GbLimits, Ideal};
use crate::poly::Poly;

/// Three-valued membership answer. `In` and `Out` are exact claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    In,
    Out,
    Unknown(UnknownReason),
}

impl Verdict {
    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::In
        } else {
            Verdict::Out
        }
    }

    pub fn is_decided(&self) -> bool {
        !matches!(self, Verdict::Unknown(_))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::In => write!(f, "in"),
            Verdict::Out => write!(f, "out"),
            Verdict::Unknown(r) => write!(f, "unknown ({r})"),
        }
    }
}

/// Resource bounds for the searches that are only semi-decidable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest Frobenius exponent `e` tried (`q = p^e`).
    pub e_max: u32,
    /// Largest power tried in power searches (integral closure oracle, Ratliff–Rush stages).
    pub n_max: u32,
    /// Longest product of generators enumerated for a Δ-system.
    pub word_max: u32,
    /// Term budget handed to every Gröbner computation.
    pub monomial_budget: usize,
    /// Iteration cap for idempotent hulls.
    pub hull_max: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { e_max: 6, n_max: 8, word_max: 4, monomial_budget: 200_000, hull_max: 32 }
    }
}

impl FromStr for Budget {
    type Err = Error;

    /// Parses `e_max=6,n_max=8`; unspecified fields keep their defaults.
    fn from_str(s: &str) -> Result<Budget> {
        let mut b = Budget::default();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (key, value) =
                item.split_once('=').ok_or_else(|| Error::invalid(format!("expected key=value, got {item}")))?;
            let n: u64 =
                value.trim().parse().map_err(|_| Error::invalid(format!("budget value for {key} is not a number")))?;
            if n == 0 {
                return Err(Error::invalid(format!("budget value for {key} must be positive")));
            }
            let small = || u32::try_from(n).map_err(|_| Error::invalid(format!("budget value for {key} too large")));
            match key.trim() {
                "e_max" => b.e_max = small()?,
                "n_max" => b.n_max = small()?,
                "word_max" => b.word_max = small()?,
                "hull_max" => b.hull_max = small()?,
                "monomial_budget" => b.monomial_budget = n as usize,
                other => return Err(Error::invalid(format!("unknown budget key {other}"))),
            }
        }
        Ok(b)
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "e_max={},n_max={},word_max={},monomial_budget={},hull_max={}",
            self.e_max, self.n_max, self.word_max, self.monomial_budget, self.hull_max
        )
    }
}

/// Properties an operation declares about itself. Declarations are claims to
/// be tested, never assumptions the checkers rely on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub claims_semiprime: bool,
    pub claims_finite_type: bool,
    /// Not a closure operation: one of the axioms is known to fail.
    pub preclosure: bool,
}

/// An operation on the ideals of a ring, with a closure engine and a
/// membership engine that must agree.
pub trait ClosureOperation: Send + Sync {
    fn name(&self) -> String;

    /// `I^cl`. Returns `Error::Undecided` when no exact answer is available.
    fn close(&self, ideal: &Ideal, budget: &Budget) -> Result<Ideal>;

    /// `f ∈ I^cl`, defaulting to a closure computation.
    fn member(&self, f: &Poly, ideal: &Ideal, budget: &Budget) -> Result<Verdict> {
        match self.close(ideal, budget) {
            Ok(c) => Ok(Verdict::from_bool(c.contains(f))),
            Err(Error::Undecided(r)) => Ok(Verdict::Unknown(r)),
            Err(e) => Err(e),
        }
    }

    fn flags(&self) -> Flags {
        Flags::default()
    }
}

pub type ClosureOp = Arc<dyn ClosureOperation>;

/// Memoizes closures by canonical ideal. Undecided results are cached as `None`.
pub struct ClosureCache<'a> {
    op: &'a dyn ClosureOperation,
    budget: Budget,
    memo: HashMap<Ideal, Option<Ideal>>,
}

impl<'a> ClosureCache<'a> {
    pub fn new(op: &'a dyn ClosureOperation, budget: &Budget) -> Self {
        ClosureCache { op, budget: *budget, memo: HashMap::new() }
    }

    pub fn op(&self) -> &'a dyn ClosureOperation {
        self.op
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    pub fn get(&mut self, ideal: &Ideal) -> Result<Option<Ideal>> {
        if let Some(hit) = self.memo.get(ideal) {
            return Ok(hit.clone());
        }
        let limits = GbLimits { max_terms: self.budget.monomial_budget };
        let value = match self.op.close(&ideal.with_gb_limits(limits), &self.budget) {
            Ok(c) => Some(c),
            Err(e) if e.is_undecided() => None,
            Err(e) => return Err(e),
        };
        self.memo.insert(ideal.clone(), value.clone());
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_parsing() {
        let b: Budget = "e_max=3, n_max=5".parse().unwrap();
        assert_eq!((b.e_max, b.n_max, b.word_max), (3, 5, 4));
        assert!("e_max=0".parse::<Budget>().is_err());
        assert!("bogus=1".parse::<Budget>().is_err());
        assert!("e_max".parse::<Budget>().is_err());
        let round: Budget = Budget::default().to_string().parse().unwrap();
        assert_eq!(round, Budget::default());
    }
}
