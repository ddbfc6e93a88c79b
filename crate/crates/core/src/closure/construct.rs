use std::sync::Mutex;

use super::{Budget, ClosureOp, ClosureOperation, Flags, Verdict};
use crate::error::{Error, Result, UnknownReason};
use crate::groebner::{Ideal, RingMap};
use crate::poly::Poly;

/// `I ↦ (IU :_R U)` for `U = K` an ideal, giving `(IK : K)`, or `U = R/𝔞`,
/// giving `I + 𝔞`.
#[derive(Clone, Debug)]
pub enum ModuleClosure {
    Ideal(Ideal),
    Quotient(Ideal),
}

impl ClosureOperation for ModuleClosure {
    fn name(&self) -> String {
        match self {
            ModuleClosure::Ideal(k) => format!("modclosure({k})"),
            ModuleClosure::Quotient(a) => format!("quotient({a})"),
        }
    }

    fn close(&self, ideal: &Ideal, _budget: &Budget) -> Result<Ideal> {
        match self {
            ModuleClosure::Ideal(k) => ideal.product(k)?.colon(k),
            ModuleClosure::Quotient(a) => ideal.sum(a),
        }
    }

    fn flags(&self) -> Flags {
        Flags { claims_semiprime: true, ..Flags::default() }
    }
}

/// `I ↦ φ⁻¹((φ(I)S)^d)` for a ring map `φ: R → S` and a closure `d` on `S`.
pub struct Contraction {
    map: RingMap,
    inner: ClosureOp,
}

impl Contraction {
    pub fn new(map: RingMap, inner: ClosureOp) -> Contraction {
        Contraction { map, inner }
    }
}

impl ClosureOperation for Contraction {
    fn name(&self) -> String {
        format!("contract({} -> {}, {})", self.map.source(), self.map.target(), self.inner.name())
    }

    fn close(&self, ideal: &Ideal, budget: &Budget) -> Result<Ideal> {
        let up = self.inner.close(&self.map.extend(ideal)?, budget)?;
        self.map.preimage(&up)
    }

    fn member(&self, f: &Poly, ideal: &Ideal, budget: &Budget) -> Result<Verdict> {
        if f.ring() != self.map.source() {
            return Err(Error::RingMismatch);
        }
        self.inner.member(&self.map.apply(f), &self.map.extend(ideal)?, budget)
    }

    fn flags(&self) -> Flags {
        self.inner.flags()
    }
}

/// `I ↦ ∩_λ I^{c_λ}`; the empty meet is the indiscrete closure.
pub struct Intersection {
    parts: Vec<ClosureOp>,
}

impl Intersection {
    pub fn new(parts: Vec<ClosureOp>) -> Intersection {
        Intersection { parts }
    }
}

impl ClosureOperation for Intersection {
    fn name(&self) -> String {
        let names: Vec<String> = self.parts.iter().map(|c| c.name()).collect();
        format!("meet({})", names.join(", "))
    }

    fn close(&self, ideal: &Ideal, budget: &Budget) -> Result<Ideal> {
        let mut acc = Ideal::unit(ideal.ring()).with_gb_limits(ideal.limits());
        for c in &self.parts {
            acc = acc.intersection(&c.close(ideal, budget)?)?;
        }
        Ok(acc)
    }

    fn member(&self, f: &Poly, ideal: &Ideal, budget: &Budget) -> Result<Verdict> {
        let mut unknown = None;
        for c in &self.parts {
            match c.member(f, ideal, budget)? {
                Verdict::Out => return Ok(Verdict::Out),
                Verdict::Unknown(r) => unknown = Some(r),
                Verdict::In => {}
            }
        }
        Ok(unknown.map(Verdict::Unknown).unwrap_or(Verdict::In))
    }

    fn flags(&self) -> Flags {
        let semiprime = self.parts.iter().all(|c| c.flags().claims_semiprime);
        Flags { claims_semiprime: semiprime, ..Flags::default() }
    }
}

/// `I ↦ ∪_λ I^{c_λ}` over a family the caller asserts to be directed. Each
/// evaluation checks directedness on the closures it computed and logs any
/// pair with no common upper bound in the family.
pub struct DirectedUnion {
    parts: Vec<ClosureOp>,
    violations: Mutex<Vec<String>>,
}

impl DirectedUnion {
    pub fn new(parts: Vec<ClosureOp>) -> DirectedUnion {
        DirectedUnion { parts, violations: Mutex::new(Vec::new()) }
    }

    /// Directedness failures observed so far.
    pub fn directedness_violations(&self) -> Vec<String> {
        self.violations.lock().expect("poisoned").clone()
    }
}

impl ClosureOperation for DirectedUnion {
    fn name(&self) -> String {
        let names: Vec<String> = self.parts.iter().map(|c| c.name()).collect();
        format!("union({})", names.join(", "))
    }

    fn close(&self, ideal: &Ideal, budget: &Budget) -> Result<Ideal> {
        let stages = self.parts.iter().map(|c| c.close(ideal, budget)).collect::<Result<Vec<_>>>()?;
        for a in 0..stages.len() {
            for b in a + 1..stages.len() {
                let bounded = stages.iter().any(|k| stages[a].is_subset(k) && stages[b].is_subset(k));
                if !bounded {
                    self.violations.lock().expect("poisoned").push(format!(
                        "{} and {} have no upper bound among the stages at {ideal}",
                        self.parts[a].name(),
                        self.parts[b].name()
                    ));
                }
            }
        }
        // for a directed family the union is the sum
        let mut acc = ideal.clone();
        for s in &stages {
            acc = acc.sum(s)?;
        }
        Ok(acc)
    }

    fn member(&self, f: &Poly, ideal: &Ideal, budget: &Budget) -> Result<Verdict> {
        let mut unknown = None;
        for c in &self.parts {
            match c.member(f, ideal, budget)? {
                Verdict::In => return Ok(Verdict::In),
                Verdict::Unknown(r) => unknown = Some(r),
                Verdict::Out => {}
            }
        }
        Ok(unknown.map(Verdict::Unknown).unwrap_or(Verdict::Out))
    }

    fn flags(&self) -> Flags {
        let semiprime = self.parts.iter().all(|c| c.flags().claims_semiprime);
        Flags { claims_semiprime: semiprime, ..Flags::default() }
    }
}

/// Iterates an extensive, order-preserving operation to its fixpoint.
pub struct IdempotentHull {
    inner: ClosureOp,
}

impl IdempotentHull {
    pub fn new(inner: ClosureOp) -> IdempotentHull {
        IdempotentHull { inner }
    }

    /// The chain `I, d(I), d(d(I)), …` up to and including the fixpoint.
    pub fn chain(&self, ideal: &Ideal, budget: &Budget) -> Result<Vec<Ideal>> {
        let mut chain = vec![ideal.clone()];
        for _ in 0..budget.hull_max {
            let current = chain.last().unwrap();
            let next = self.inner.close(current, budget)?;
            if !current.is_subset(&next) {
                return Err(Error::invalid(format!(
                    "{} is not extensive at {current}: the hull is undefined",
                    self.inner.name()
                )));
            }
            if next == *current {
                return Ok(chain);
            }
            chain.push(next);
        }
        Err(Error::Undecided(UnknownReason::BudgetExhausted))
    }
}

impl ClosureOperation for IdempotentHull {
    fn name(&self) -> String {
        format!("hull({})", self.inner.name())
    }

    fn close(&self, ideal: &Ideal, budget: &Budget) -> Result<Ideal> {
        Ok(self.chain(ideal, budget)?.pop().unwrap())
    }

    fn flags(&self) -> Flags {
        Flags { claims_semiprime: self.inner.flags().claims_semiprime, ..Flags::default() }
    }
}

/// `c_f`: the finite-type version of `c`. Every ideal here is finitely
/// generated, so `c_f = c`; only the declaration changes.
pub struct FiniteType {
    inner: ClosureOp,
}

impl FiniteType {
    pub fn new(inner: ClosureOp) -> FiniteType {
        FiniteType { inner }
    }
}

impl ClosureOperation for FiniteType {
    fn name(&self) -> String {
        format!("cf({})", self.inner.name())
    }

    fn close(&self, ideal: &Ideal, budget: &Budget) -> Result<Ideal> {
        self.inner.close(ideal, budget)
    }

    fn member(&self, f: &Poly, ideal: &Ideal, budget: &Budget) -> Result<Verdict> {
        self.inner.member(f, ideal, budget)
    }

    fn flags(&self) -> Flags {
        Flags { claims_finite_type: true, ..self.inner.flags() }
    }
}
