use crate::closure::{is_nonzerodivisor, Budget, ClosureOperation, Flags, Verdict};
use crate::error::{Error, Result, UnknownReason};
use crate::groebner::Ideal;
use crate::poly::Poly;

use super::finite_context;

/// A multiplicatively closed set of ideals, generated by `K_1, …, K_m`.
#[derive(Clone, Debug)]
pub struct DeltaSystem {
    gens: Vec<Ideal>,
}

impl DeltaSystem {
    pub fn new(gens: Vec<Ideal>) -> Result<DeltaSystem> {
        if gens.is_empty() {
            return Err(Error::invalid("a Δ-system needs at least one generator"));
        }
        if gens.iter().any(|k| k.ring() != gens[0].ring()) {
            return Err(Error::RingMismatch);
        }
        Ok(DeltaSystem { gens })
    }

    pub fn generators(&self) -> &[Ideal] {
        &self.gens
    }

    /// Distinct products of generators with at most `max_len` factors
    /// (unbounded when `None`). The flag says whether the enumeration is
    /// complete, i.e. no longer word produces a new ideal.
    pub fn members(&self, max_len: Option<u32>) -> Result<(Vec<Ideal>, bool)> {
        let mut members: Vec<Ideal> = Vec::new();
        let mut frontier: Vec<Ideal> = Vec::new();
        for k in &self.gens {
            if !members.contains(k) {
                members.push(k.clone());
                frontier.push(k.clone());
            }
        }
        let mut len = 1;
        while !frontier.is_empty() {
            if max_len.is_some_and(|m| len >= m) {
                return Ok((members, false));
            }
            let mut next = Vec::new();
            for w in &frontier {
                for k in &self.gens {
                    let p = w.product(k)?;
                    if !members.contains(&p) {
                        members.push(p.clone());
                        next.push(p);
                    }
                }
            }
            frontier = next;
            len += 1;
        }
        Ok((members, true))
    }

    /// Every generator is principal on a non-zerodivisor, so each `(IK : K) = I`.
    fn is_trivial(&self) -> Result<bool> {
        for k in &self.gens {
            let g = k.canonical_generators();
            if g.len() != 1 || !is_nonzerodivisor(&g[0])? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `I^Δ = ∪_{K ∈ Δ} (IK : K)`. The family is directed (`I^H + I^K ⊆ I^{HK}`),
/// so the union is the sum of the stages. Exact when Δ has finitely many
/// distinct members (always on finite rings) or is generated by non-zerodivisors.
#[derive(Clone, Debug)]
pub struct Delta {
    system: DeltaSystem,
}

impl Delta {
    pub fn new(system: DeltaSystem) -> Delta {
        Delta { system }
    }

    pub fn system(&self) -> &DeltaSystem {
        &self.system
    }

    fn stage_union(ideal: &Ideal, members: &[Ideal]) -> Result<Ideal> {
        let mut acc = ideal.clone();
        for k in members {
            acc = acc.sum(&ideal.product(k)?.colon(k)?)?;
        }
        Ok(acc)
    }

    fn check_ring(&self, ideal: &Ideal) -> Result<()> {
        if ideal.ring() != self.system.gens[0].ring() {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }
}

impl ClosureOperation for Delta {
    fn name(&self) -> String {
        let gens: Vec<String> = self.system.gens.iter().map(|k| k.to_string()).collect();
        format!("delta[{}]", gens.join(", "))
    }

    fn close(&self, ideal: &Ideal, budget: &Budget) -> Result<Ideal> {
        self.check_ring(ideal)?;
        let bound = if finite_context(ideal.ring()).is_some() { None } else { Some(budget.word_max) };
        let (members, complete) = self.system.members(bound)?;
        if complete {
            return Delta::stage_union(ideal, &members);
        }
        if self.system.is_trivial()? {
            return Ok(ideal.clone());
        }
        Err(Error::Undecided(UnknownReason::BudgetExhausted))
    }

    fn member(&self, f: &Poly, ideal: &Ideal, budget: &Budget) -> Result<Verdict> {
        match self.close(ideal, budget) {
            Ok(c) => Ok(Verdict::from_bool(c.contains(f))),
            Err(Error::Undecided(r)) => {
                let (members, _) = self.system.members(Some(budget.word_max))?;
                if Delta::stage_union(ideal, &members)?.contains(f) {
                    Ok(Verdict::In)
                } else {
                    Ok(Verdict::Unknown(r))
                }
            }
            Err(e) => Err(e),
        }
    }

    fn flags(&self) -> Flags {
        Flags { claims_semiprime: true, ..Flags::default() }
    }
}
