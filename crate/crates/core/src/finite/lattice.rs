use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use super::linalg::Subspace;
use super::ring::FiniteRing;
use crate::closure::{Budget, ClosureCache, ClosureOperation};
use crate::error::{Error, Result};
use crate::groebner::Ideal;

/// Default cap on the number of ideals enumerated.
pub const DEFAULT_MAX_IDEALS: usize = 100_000;

/// Every ideal of a finite ring, sorted by dimension and then by echelon form.
#[derive(Debug)]
pub struct IdealLattice {
    ring: Arc<FiniteRing>,
    spaces: Vec<Subspace>,
    ideals: Vec<Ideal>,
    index: HashMap<Subspace, usize>,
}

impl IdealLattice {
    pub fn new(ring: Arc<FiniteRing>) -> Result<IdealLattice> {
        IdealLattice::with_cap(ring, DEFAULT_MAX_IDEALS)
    }

    /// Enumerates principal ideals of all elements and closes under sums;
    /// every ideal of a finite ring is such a sum.
    pub fn with_cap(ring: Arc<FiniteRing>, cap: usize) -> Result<IdealLattice> {
        let principal: BTreeSet<Subspace> =
            ring.elements().iter().map(|a| ring.ideal_span(std::slice::from_ref(a))).collect();
        let principal: Vec<Subspace> = principal.into_iter().collect();
        let mut all: BTreeSet<Subspace> = principal.iter().cloned().collect();
        let mut frontier: Vec<Subspace> = principal.clone();
        while let Some(s) = frontier.pop() {
            for q in &principal {
                let t = s.sum(q);
                if !all.contains(&t) {
                    if all.len() >= cap {
                        return Err(Error::Resource(format!("ideal lattice exceeds {cap} ideals")));
                    }
                    all.insert(t.clone());
                    frontier.push(t);
                }
            }
        }
        let spaces: Vec<Subspace> = all.into_iter().collect();
        let ideals = spaces.iter().map(|s| ring.ideal_of(s)).collect();
        let index = spaces.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Ok(IdealLattice { ring, spaces, ideals, index })
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.spaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn ideal(&self, i: usize) -> &Ideal {
        &self.ideals[i]
    }

    pub fn space(&self, i: usize) -> &Subspace {
        &self.spaces[i]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    pub fn maximal(&self) -> Option<usize> {
        self.ring.maximal_ideal().map(|m| self.index[m])
    }

    pub fn locate_space(&self, s: &Subspace) -> Result<usize> {
        self.index.get(s).copied().ok_or_else(|| Error::invalid("subspace is not an ideal of the lattice"))
    }

    pub fn locate(&self, ideal: &Ideal) -> Result<usize> {
        self.locate_space(&self.ring.subspace_of(ideal)?)
    }

    pub fn is_subset(&self, a: usize, b: usize) -> bool {
        self.spaces[a].is_subset(&self.spaces[b])
    }

    pub fn sum(&self, a: usize, b: usize) -> usize {
        self.index[&self.spaces[a].sum(&self.spaces[b])]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.index[&self.spaces[a].intersection(&self.spaces[b])]
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.index[&self.ring.ideal_product(&self.spaces[a], &self.spaces[b])]
    }

    pub fn colon(&self, a: usize, b: usize) -> usize {
        self.index[&self.ring.ideal_colon(&self.spaces[a], &self.spaces[b])]
    }

    /// Minimal number of generators `dim I − dim mI` (local rings only).
    pub fn mu(&self, a: usize) -> Option<usize> {
        let m = self.maximal()?;
        Some(self.spaces[a].dim() - self.spaces[self.product(m, a)].dim())
    }

    /// Prime: proper, and `ab ⊆ P` implies `a ∈ P` or `b ∈ P` on elements.
    pub fn is_prime(&self, a: usize) -> bool {
        if a == self.top() {
            return false;
        }
        let p = &self.spaces[a];
        let elems = self.ring.elements();
        let outside: Vec<_> = elems.iter().filter(|x| !p.contains(x)).collect();
        outside.iter().all(|x| outside.iter().all(|y| !p.contains(&self.ring.mul(x, y))))
    }

    /// The closure of every ideal as a lattice index; `None` where undecided.
    pub fn closure_table(&self, cl: &dyn ClosureOperation, budget: &Budget) -> Result<Vec<Option<usize>>> {
        let mut cache = ClosureCache::new(cl, budget);
        self.ideals
            .iter()
            .map(|i| match cache.get(i)? {
                Some(c) => self.locate(&c).map(Some),
                None => Ok(None),
            })
            .collect()
    }

    /// Every ordered pair `(J, I)` with `J ⊆ I`.
    pub fn inclusions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..self.len() {
            for i in 0..self.len() {
                if self.is_subset(j, i) {
                    out.push((j, i));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, Ring};

    fn lattice(vars: &[&str], rels: &[&str]) -> IdealLattice {
        let base = Ring::polynomial(Field::prime(2).unwrap(), vars).unwrap();
        let r = Ring::quotient_str(&base, rels).unwrap();
        IdealLattice::new(Arc::new(FiniteRing::new(&r).unwrap())).unwrap()
    }

    #[test]
    fn counts_match_hand_enumeration() {
        assert_eq!(lattice(&["x", "y"], &["x^2", "x*y", "y^2"]).len(), 6);
        assert_eq!(lattice(&["x"], &["x^3"]).len(), 4);
        assert_eq!(lattice(&["x", "y"], &["x^2", "y^2"]).len(), 7);
        assert_eq!(lattice(&["x"], &["x"]).len(), 2);
    }

    #[test]
    fn chain_structure_and_mu() {
        let l = lattice(&["x"], &["x^3"]);
        for a in 0..l.len() {
            for b in 0..l.len() {
                assert!(l.is_subset(a, b) || l.is_subset(b, a));
            }
        }
        let m = l.maximal().unwrap();
        assert_eq!(l.mu(m), Some(1));
        assert_eq!(l.mu(l.bottom()), Some(0));
        assert!(l.is_prime(m));
        assert!(!l.is_prime(l.bottom()));
    }
}
