//! Reductions, spreads, cores and special parts on the ideal lattice of a finite local ring.

use serde::Serialize;

use crate::closure::{Budget, CheckReport, ClosureOperation, Status};
use crate::error::{Error, Result, UnknownReason};
use crate::finite::{IdealLattice, Record};
use crate::groebner::Ideal;

/// The closure of every lattice ideal, as indices. Fails if any entry is undecided.
fn full_table(lattice: &IdealLattice, cl: &dyn ClosureOperation, budget: &Budget) -> Result<Vec<usize>> {
    lattice
        .closure_table(cl, budget)?
        .into_iter()
        .map(|c| c.ok_or(Error::Undecided(UnknownReason::BudgetExhausted)))
        .collect()
}

fn maximal(lattice: &IdealLattice) -> Result<usize> {
    lattice.maximal().ok_or_else(|| Error::invalid("reductions need a local ring"))
}

/// `J ⊆ I ⊆ (J + mI)^c ⟹ J^c = I^c`, over every pair of the lattice.
pub fn nakayama_check(lattice: &IdealLattice, cl: &dyn ClosureOperation, budget: &Budget) -> Result<CheckReport> {
    let m = maximal(lattice)?;
    let table = full_table(lattice, cl, budget)?;
    let mut report = CheckReport::new("nakayama", cl.name());
    for (j, i) in lattice.inclusions() {
        report.cases += 1;
        let bound = table[lattice.sum(j, lattice.product(m, i))];
        if lattice.is_subset(i, bound) && table[j] != table[i] {
            report.violate("nakayama", vec![lattice.ideal(j).to_string(), lattice.ideal(i).to_string()]);
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalReduction {
    pub ideal: String,
    #[serde(skip)]
    pub index: usize,
    pub mu: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Spread {
    Value(usize),
    /// Two minimal reductions with different numbers of generators.
    IllDefined(String, String),
}

/// Minimal reductions of one ideal, with spread and core.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub closure: String,
    pub ideal: String,
    pub minimal_reductions: Vec<MinimalReduction>,
    pub spread: Spread,
    pub core: String,
    #[serde(skip)]
    pub core_index: usize,
    pub nakayama: Status,
    /// Pairs `(K, J)`, `K ⊆ J` a minimal reduction inside a reduction, where a
    /// minimal generating set of `K` does not extend to one of `J`.
    pub extension_failures: Vec<(String, String)>,
}

impl ReductionReport {
    pub fn spread_value(&self) -> Option<usize> {
        match self.spread {
            Spread::Value(v) => Some(v),
            Spread::IllDefined(..) => None,
        }
    }

    pub fn to_record(&self, check: &str, ring: &str) -> Record {
        let mut witnesses: Vec<String> =
            self.minimal_reductions.iter().map(|r| format!("minimal reduction {} (mu {})", r.ideal, r.mu)).collect();
        witnesses.push(match &self.spread {
            Spread::Value(v) => format!("spread {v}"),
            Spread::IllDefined(a, b) => format!("spread ill-defined: {a} | {b}"),
        });
        witnesses.push(format!("core {}", self.core));
        witnesses.push(format!("nakayama {}", self.nakayama));
        witnesses.extend(self.extension_failures.iter().map(|(k, j)| format!("extension fails: {k} in {j}")));
        let ok = self.spread_value().is_some() && self.extension_failures.is_empty();
        Record {
            check: check.to_string(),
            ring: ring.to_string(),
            closure: self.closure.clone(),
            status: if ok { "pass" } else { "fail" }.to_string(),
            witnesses,
        }
    }
}

/// A closure tabulated on a lattice, ready for reduction queries.
pub struct ReductionContext<'a> {
    lattice: &'a IdealLattice,
    closure: String,
    m: usize,
    table: Vec<usize>,
    nakayama: CheckReport,
}

impl<'a> ReductionContext<'a> {
    pub fn new(lattice: &'a IdealLattice, cl: &dyn ClosureOperation, budget: &Budget) -> Result<Self> {
        let m = maximal(lattice)?;
        let table = full_table(lattice, cl, budget)?;
        let nakayama = nakayama_check(lattice, cl, budget)?;
        Ok(ReductionContext { lattice, closure: cl.name(), m, table, nakayama })
    }

    pub fn nakayama(&self) -> &CheckReport {
        &self.nakayama
    }

    pub fn closure_of(&self, i: usize) -> usize {
        self.table[i]
    }

    /// Lattice indices of the reductions of `i`.
    pub fn reductions(&self, i: usize) -> Vec<usize> {
        (0..self.lattice.len()).filter(|&j| self.lattice.is_subset(j, i) && self.table[j] == self.table[i]).collect()
    }

    pub fn minimal_reductions(&self, i: usize) -> Vec<usize> {
        let reductions = self.reductions(i);
        reductions
            .iter()
            .copied()
            .filter(|&j| !reductions.iter().any(|&k| k != j && self.lattice.is_subset(k, j)))
            .collect()
    }

    fn mu(&self, i: usize) -> usize {
        self.lattice.space(i).dim() - self.lattice.space(self.lattice.product(self.m, i)).dim()
    }

    /// A minimal generating set of `K` extends to one of `J` iff its image in
    /// `J/mJ` stays independent: `dim(K + mJ) − dim(mJ) = μ(K)`.
    fn extends(&self, k: usize, j: usize) -> bool {
        let mj = self.lattice.product(self.m, j);
        let with_k = self.lattice.sum(k, mj);
        self.lattice.space(with_k).dim() - self.lattice.space(mj).dim() == self.mu(k)
    }

    pub fn report(&self, i: usize) -> ReductionReport {
        let l = self.lattice;
        let minimal = self.minimal_reductions(i);
        let listed: Vec<MinimalReduction> = minimal
            .iter()
            .map(|&j| MinimalReduction { ideal: l.ideal(j).to_string(), index: j, mu: self.mu(j) })
            .collect();
        let spread = match listed.iter().find(|r| r.mu != listed[0].mu) {
            None => Spread::Value(listed[0].mu),
            Some(other) => Spread::IllDefined(listed[0].ideal.clone(), other.ideal.clone()),
        };
        let core_index = minimal.iter().fold(l.top(), |acc, &j| l.meet(acc, j));
        let mut extension_failures = Vec::new();
        if self.nakayama.status() == Status::Pass {
            for j in self.reductions(i) {
                let inside: Vec<usize> = minimal.iter().copied().filter(|&k| l.is_subset(k, j)).collect();
                if inside.is_empty() {
                    extension_failures.push(("none".to_string(), l.ideal(j).to_string()));
                }
                for k in inside.into_iter().filter(|&k| !self.extends(k, j)) {
                    extension_failures.push((l.ideal(k).to_string(), l.ideal(j).to_string()));
                }
            }
        }
        ReductionReport {
            closure: self.closure.clone(),
            ideal: l.ideal(i).to_string(),
            minimal_reductions: listed,
            spread,
            core: l.ideal(core_index).to_string(),
            core_index,
            nakayama: self.nakayama.status(),
            extension_failures,
        }
    }
}

/// Minimal reductions, spread and core of `ideal`, found by exhaustive search of the lattice.
pub fn minimal_reductions(
    lattice: &IdealLattice,
    cl: &dyn ClosureOperation,
    ideal: &Ideal,
    budget: &Budget,
) -> Result<ReductionReport> {
    let i = lattice.locate(ideal)?;
    Ok(ReductionContext::new(lattice, cl, budget)?.report(i))
}

/// `I ↦ mI`, the smallest map allowed by the trapped condition.
#[derive(Clone, Debug)]
pub struct MaximalTimes {
    m: Ideal,
}

impl MaximalTimes {
    pub fn new(m: Ideal) -> MaximalTimes {
        MaximalTimes { m }
    }
}

impl ClosureOperation for MaximalTimes {
    fn name(&self) -> String {
        "m-times".into()
    }

    fn close(&self, ideal: &Ideal, _budget: &Budget) -> Result<Ideal> {
        ideal.product(&self.m)
    }
}

/// The four defining properties of a special part `sp` of `cl`, over every
/// ideal and pair of the lattice: trapped, depends only on the closure,
/// order-preserving, special Nakayama.
pub fn special_part_axioms(
    lattice: &IdealLattice,
    sp: &dyn ClosureOperation,
    cl: &dyn ClosureOperation,
    budget: &Budget,
) -> Result<CheckReport> {
    let m = maximal(lattice)?;
    let c = full_table(lattice, cl, budget)?;
    let s = full_table(lattice, sp, budget)?;
    let show = |i: usize| lattice.ideal(i).to_string();
    let mut report = CheckReport::new("special-part", format!("{} of {}", sp.name(), cl.name()));
    for i in 0..lattice.len() {
        report.cases += 1;
        if !lattice.is_subset(lattice.product(m, i), s[i]) || !lattice.is_subset(s[i], c[i]) {
            report.violate("trapped", vec![show(i), show(s[i])]);
        }
        if s[c[i]] != s[i] {
            report.violate("depends-on-closure", vec![show(i), show(c[i])]);
        }
    }
    for (j, i) in lattice.inclusions() {
        report.cases += 1;
        if !lattice.is_subset(s[j], s[i]) {
            report.violate("order-preservation", vec![show(j), show(i)]);
        }
        if lattice.is_subset(i, c[lattice.sum(j, s[i])]) && !lattice.is_subset(i, c[j]) {
            report.violate("special-nakayama", vec![show(j), show(i)]);
        }
    }
    Ok(report)
}

/// Property (α): `I^c = I + I^{sp}` for every lattice ideal. When it holds,
/// every ideal's reduction report is computed and an ill-defined spread is
/// recorded as a violation.
pub fn special_decomposition_check(
    lattice: &IdealLattice,
    cl: &dyn ClosureOperation,
    sp: &dyn ClosureOperation,
    budget: &Budget,
) -> Result<(CheckReport, Vec<ReductionReport>)> {
    let c = full_table(lattice, cl, budget)?;
    let s = full_table(lattice, sp, budget)?;
    let mut report = CheckReport::new("special-decomposition", format!("{} with {}", cl.name(), sp.name()));
    for i in 0..lattice.len() {
        report.cases += 1;
        if c[i] != lattice.sum(i, s[i]) {
            report.violate("decomposition", vec![lattice.ideal(i).to_string(), lattice.ideal(c[i]).to_string()]);
        }
    }
    if report.status() != Status::Pass {
        return Ok((report, Vec::new()));
    }
    let ctx = ReductionContext::new(lattice, cl, budget)?;
    let reports: Vec<ReductionReport> = (0..lattice.len()).map(|i| ctx.report(i)).collect();
    for r in &reports {
        if let Spread::IllDefined(a, b) = &r.spread {
            report.violate("spread", vec![r.ideal.clone(), a.clone(), b.clone()]);
        }
    }
    Ok((report, reports))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::FiniteRing;
    use crate::poly::{Field, Ring};
    use crate::standard::{Frobenius, FrobeniusSpecialPart, Identity, Radical, VOperation};

    fn lattice(vars: &[&str], rels: &[&str]) -> IdealLattice {
        let base = Ring::polynomial(Field::prime(2).unwrap(), vars).unwrap();
        let r = Ring::quotient_str(&base, rels).unwrap();
        IdealLattice::new(FiniteRing::cached(&r).unwrap()).unwrap()
    }

    #[test]
    fn identity_is_nakayama_and_its_reductions_are_trivial() {
        let b = Budget::default();
        let l = lattice(&["x", "y"], &["x^2", "y^2"]);
        let ctx = ReductionContext::new(&l, &Identity, &b).unwrap();
        assert_eq!(ctx.nakayama().status(), Status::Pass);
        for i in 0..l.len() {
            let r = ctx.report(i);
            assert_eq!(r.minimal_reductions.len(), 1);
            assert_eq!(r.core_index, i);
            assert_eq!(r.spread_value(), l.mu(i));
        }
    }

    #[test]
    fn frobenius_on_the_square_zero_ring() {
        let b = Budget::default();
        let l = lattice(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let m = l.ideal(l.maximal().unwrap()).clone();
        let r = minimal_reductions(&l, &Frobenius, &m, &b).unwrap();
        assert_eq!(r.minimal_reductions.len(), 1);
        assert_eq!(r.minimal_reductions[0].index, l.bottom());
        assert_eq!(r.spread, Spread::Value(0));
        assert_eq!(r.core_index, l.bottom());
        let v = minimal_reductions(&l, &VOperation, &m, &b).unwrap();
        assert_eq!(v.minimal_reductions.len(), 1);
        assert_eq!(v.minimal_reductions[0].index, l.maximal().unwrap());
    }

    #[test]
    fn frobenius_special_part_satisfies_the_axioms() {
        let b = Budget::default();
        for l in [lattice(&["x", "y"], &["x^2", "x*y", "y^2"]), lattice(&["x"], &["x^3"])] {
            let axioms = special_part_axioms(&l, &FrobeniusSpecialPart, &Frobenius, &b).unwrap();
            assert_eq!(axioms.violations, vec![]);
            let (dec, reports) = special_decomposition_check(&l, &Frobenius, &FrobeniusSpecialPart, &b).unwrap();
            assert_eq!(dec.status(), Status::Pass);
            assert_eq!(reports.len(), l.len());
        }
    }

    #[test]
    fn radical_on_artinian_rings_is_nakayama() {
        let b = Budget::default();
        let l = lattice(&["x"], &["x^3"]);
        assert_eq!(nakayama_check(&l, &Radical, &b).unwrap().status(), Status::Pass);
    }

    #[test]
    fn trivial_special_part_is_trapped_and_monotone() {
        let b = Budget::default();
        let l = lattice(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let m = l.ideal(l.maximal().unwrap()).clone();
        let r = special_part_axioms(&l, &MaximalTimes::new(m), &Frobenius, &b).unwrap();
        assert!(!r.has_violation("trapped"));
        assert!(!r.has_violation("order-preservation"));
    }
}
