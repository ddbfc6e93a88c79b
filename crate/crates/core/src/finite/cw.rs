use std::sync::Arc;

use super::lab::closed_census;
use super::lattice::IdealLattice;
use super::linalg::{Subspace, Vector};
use crate::closure::{Budget, CheckReport, ClosureCache, ClosureOp, ClosureOperation};
use crate::error::{Error, Result, UnknownReason};
use crate::groebner::Ideal;

/// `I^{c_w} = {x | for every 𝔭 ∈ c_f-Max there is d ∉ 𝔭 with dx ∈ I}`, where
/// c_f-Max is the set of maximal proper `c`-closed ideals of a finite ring.
/// Every ideal here is finitely generated, so `c_f = c`.
pub struct Cw {
    inner: ClosureOp,
    lattice: Arc<IdealLattice>,
    maximal: Vec<usize>,
    maximal_prime: Vec<bool>,
}

impl Cw {
    pub fn new(inner: ClosureOp, lattice: Arc<IdealLattice>, budget: &Budget) -> Result<Cw> {
        let census = closed_census(&lattice, inner.as_ref(), budget)?;
        if !census.undecided.is_empty() {
            return Err(Error::Undecided(UnknownReason::BudgetExhausted));
        }
        Ok(Cw { inner, lattice, maximal: census.maximal_closed, maximal_prime: census.maximal_closed_prime })
    }

    pub fn lattice(&self) -> &Arc<IdealLattice> {
        &self.lattice
    }

    /// Lattice indices of c_f-Max.
    pub fn closed_maximal(&self) -> &[usize] {
        &self.maximal
    }

    /// Whether every member of c_f-Max is prime; guaranteed for semi-prime `c`.
    pub fn maximal_are_prime(&self) -> bool {
        self.maximal_prime.iter().all(|&b| b)
    }

    /// The elements satisfying the defining condition, and whether they form an ideal.
    pub fn elementwise(&self, ideal: &Ideal) -> Result<(Vec<Vector>, bool)> {
        let fr = self.lattice.ring();
        let space = fr.subspace_of(ideal)?;
        let members: Vec<Vector> = fr
            .elements()
            .into_iter()
            .filter(|x| {
                let colon = space.preimage(&fr.mul_map(x));
                self.maximal.iter().all(|&p| !colon.is_subset(self.lattice.space(p)))
            })
            .collect();
        let span = fr.ideal_span(&members);
        let is_ideal = (fr.characteristic() as u64).pow(span.dim() as u32) == members.len() as u64;
        Ok((members, is_ideal))
    }

    /// Checks `I^{c_w} ⊆ I^c` on every lattice ideal.
    pub fn check_below(&self, budget: &Budget) -> Result<CheckReport> {
        let mut report = CheckReport::new("cw-below", self.name());
        let mut cache = ClosureCache::new(self.inner.as_ref(), budget);
        for i in self.lattice.ideals() {
            report.cases += 1;
            let cw = self.close(i, budget)?;
            match cache.get(i)? {
                Some(c) if !cw.is_subset(&c) => {
                    report.violate("cw-below", vec![i.to_string(), cw.to_string(), c.to_string()])
                }
                Some(_) => {}
                None => report.unknown.push(i.to_string()),
            }
        }
        Ok(report)
    }
}

impl ClosureOperation for Cw {
    fn name(&self) -> String {
        format!("cw({})", self.inner.name())
    }

    fn close(&self, ideal: &Ideal, _budget: &Budget) -> Result<Ideal> {
        if ideal.ring() != self.lattice.ring().ring() {
            return Err(Error::RingMismatch);
        }
        let (members, is_ideal) = self.elementwise(ideal)?;
        if !is_ideal {
            return Err(Error::invalid(format!("{}: the elements over {ideal} do not form an ideal", self.name())));
        }
        let fr = self.lattice.ring();
        Ok(fr.ideal_of(&Subspace::span(fr.dim(), fr.characteristic(), members)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::FiniteRing;
    use crate::poly::{Field, Ring};
    use crate::standard::{Identity, Indiscrete, VOperation};

    fn lattice(vars: &[&str], rels: &[&str]) -> Arc<IdealLattice> {
        let base = Ring::polynomial(Field::prime(2).unwrap(), vars).unwrap();
        let r = Ring::quotient_str(&base, rels).unwrap();
        Arc::new(IdealLattice::new(FiniteRing::cached(&r).unwrap()).unwrap())
    }

    #[test]
    fn local_ring_with_closed_maximal_gives_identity() {
        let b = Budget::default();
        let l = lattice(&["x"], &["x^3"]);
        let cw = Cw::new(Arc::new(Identity), l.clone(), &b).unwrap();
        assert_eq!(cw.closed_maximal(), &[l.maximal().unwrap()]);
        for i in l.ideals() {
            assert_eq!(&cw.close(i, &b).unwrap(), i);
        }
        assert_eq!(cw.check_below(&b).unwrap().violations, vec![]);
    }

    #[test]
    fn indiscrete_has_no_closed_maximal() {
        let b = Budget::default();
        let l = lattice(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let cw = Cw::new(Arc::new(Indiscrete), l.clone(), &b).unwrap();
        assert!(cw.closed_maximal().is_empty());
        assert!(cw.close(&l.ideal(l.bottom()).clone(), &b).unwrap().is_unit());
    }

    #[test]
    fn v_operation_maximal_closed_ideals_are_not_prime() {
        let b = Budget::default();
        let l = lattice(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let cw = Cw::new(Arc::new(VOperation), l.clone(), &b).unwrap();
        assert_eq!(cw.closed_maximal().len(), 3);
        assert!(!cw.maximal_are_prime());
        assert_eq!(cw.close(l.ideal(l.bottom()), &b).unwrap(), l.ideal(l.maximal().unwrap()).clone());
    }
}
