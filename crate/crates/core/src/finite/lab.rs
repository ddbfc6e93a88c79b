use serde::Serialize;

use super::lattice::IdealLattice;
use crate::closure::{
    check_axioms, check_basics, semiprime_check, Budget, CheckReport, ClosureCache, ClosureOperation, Status,
};
use crate::error::{Error, Result};
use crate::groebner::{Ideal, RingMap};

/// Axioms, basic consequences and semi-primality over the whole lattice, with
/// no sampling: every ideal, every pair.
pub fn exhaustive_check(lattice: &IdealLattice, cl: &dyn ClosureOperation, budget: &Budget) -> Result<CheckReport> {
    family_check(lattice.ideals(), cl, budget)
}

/// The same three suites over an explicit family and all of its pairs.
pub fn family_check(family: &[Ideal], cl: &dyn ClosureOperation, budget: &Budget) -> Result<CheckReport> {
    let mut report = CheckReport::new("exhaustive", cl.name());
    report.absorb(check_axioms(cl, family, budget)?);
    report.absorb(check_basics(cl, family, budget)?);
    let pairs: Vec<(Ideal, Ideal)> =
        family.iter().flat_map(|i| family.iter().map(move |j| (i.clone(), j.clone()))).collect();
    report.absorb(semiprime_check(cl, &pairs, budget)?);
    Ok(report)
}

/// The fixed points of a closure on a lattice, with the derived flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub closed: Vec<usize>,
    pub undecided: Vec<usize>,
    pub zero_closed: bool,
    pub all_closed: bool,
    /// Maximal elements among the proper closed ideals.
    pub maximal_closed: Vec<usize>,
    /// Whether each maximal proper closed ideal is prime.
    pub maximal_closed_prime: Vec<bool>,
    /// Pairs of closed ideals whose intersection is not closed (expected empty).
    pub non_closed_meets: Vec<(usize, usize)>,
}

pub fn closed_census(lattice: &IdealLattice, cl: &dyn ClosureOperation, budget: &Budget) -> Result<Census> {
    let table = lattice.closure_table(cl, budget)?;
    let closed: Vec<usize> = (0..lattice.len()).filter(|&i| table[i] == Some(i)).collect();
    let undecided: Vec<usize> = (0..lattice.len()).filter(|&i| table[i].is_none()).collect();
    let top = lattice.top();
    let proper: Vec<usize> = closed.iter().copied().filter(|&i| i != top).collect();
    let maximal_closed: Vec<usize> =
        proper.iter().copied().filter(|&i| !proper.iter().any(|&j| j != i && lattice.is_subset(i, j))).collect();
    let maximal_closed_prime = maximal_closed.iter().map(|&i| lattice.is_prime(i)).collect();
    let mut non_closed_meets = Vec::new();
    for (a, &i) in closed.iter().enumerate() {
        for &j in &closed[a + 1..] {
            let k = lattice.meet(i, j);
            if table[k].is_some() && table[k] != Some(k) {
                non_closed_meets.push((i, j));
            }
        }
    }
    Ok(Census {
        zero_closed: closed.contains(&lattice.bottom()),
        all_closed: closed.len() == lattice.len(),
        closed,
        undecided,
        maximal_closed,
        maximal_closed_prime,
        non_closed_meets,
    })
}

/// `φ(I^cl)S ⊆ (φ(I)S)^cl` for each `I` in `family`; the witnesses are the
/// generators of `I^cl` whose images escape.
pub fn persistence_check(
    map: &RingMap,
    source_cl: &dyn ClosureOperation,
    target_cl: &dyn ClosureOperation,
    family: &[Ideal],
    budget: &Budget,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("persistence", source_cl.name());
    let mut src = ClosureCache::new(source_cl, budget);
    let mut tgt = ClosureCache::new(target_cl, budget);
    for i in family {
        if i.ring() != map.source() {
            return Err(Error::RingMismatch);
        }
        report.cases += 1;
        let ext = map.extend(i)?;
        let (Some(ci), Some(cext)) = (src.get(i)?, tgt.get(&ext)?) else {
            report.unknown.push(i.to_string());
            continue;
        };
        for g in ci.canonical_generators() {
            let image = map.apply(&g);
            if !cext.contains(&image) {
                report.violate("persistence", vec![i.to_string(), g.to_string(), cext.to_string()]);
            }
        }
    }
    Ok(report)
}

/// One line of the JSON-lines report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub check: String,
    pub ring: String,
    pub closure: String,
    pub status: String,
    pub witnesses: Vec<String>,
}

impl Record {
    /// With `expect_violation`, a failing report becomes `expected-violation`
    /// and a passing one `missing-expected-violation`.
    pub fn from_report(report: &CheckReport, ring: &str, expect_violation: bool) -> Record {
        let status = match (report.status(), expect_violation) {
            (Status::Fail, true) => "expected-violation".to_string(),
            (Status::Pass, true) => "missing-expected-violation".to_string(),
            (s, _) => s.to_string(),
        };
        let mut witnesses: Vec<String> =
            report.violations.iter().map(|v| format!("{}: {}", v.kind, v.witnesses.join(" | "))).collect();
        witnesses.extend(report.unknown.iter().map(|u| format!("undecided: {u}")));
        Record {
            check: report.check.clone(),
            ring: ring.to_string(),
            closure: report.closure.clone(),
            status,
            witnesses,
        }
    }

    /// Whether this record lets a run exit successfully.
    pub fn is_success(&self, strict: bool) -> bool {
        match self.status.as_str() {
            "pass" | "expected-violation" => true,
            "unknown" => !strict,
            _ => false,
        }
    }
}
