use std::fmt;

use serde::Serialize;

use super::{Budget, ClosureCache, ClosureOperation};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: String,
    pub witnesses: Vec<String>,
}

impl Violation {
    pub fn new(kind: &str, witnesses: Vec<String>) -> Violation {
        Violation { kind: kind.to_string(), witnesses }
    }
}

/// Outcome of one checker run: every violation found, plus the cases that
/// could not be decided within the budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub closure: String,
    pub cases: usize,
    pub violations: Vec<Violation>,
    pub unknown: Vec<String>,
}

impl CheckReport {
    pub fn new(check: &str, closure: String) -> CheckReport {
        CheckReport { check: check.to_string(), closure, cases: 0, violations: Vec::new(), unknown: Vec::new() }
    }

    pub fn status(&self) -> Status {
        if !self.violations.is_empty() {
            Status::Fail
        } else if !self.unknown.is_empty() {
            Status::Unknown
        } else {
            Status::Pass
        }
    }

    pub fn has_violation(&self, kind: &str) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }

    pub fn violate(&mut self, kind: &str, witnesses: Vec<String>) {
        self.violations.push(Violation::new(kind, witnesses));
    }

    /// Folds another report's findings into this one.
    pub fn absorb(&mut self, other: CheckReport) {
        self.cases += other.cases;
        self.violations.extend(other.violations);
        self.unknown.extend(other.unknown);
    }
}

fn show(ideals: &[&Ideal]) -> Vec<String> {
    ideals.iter().map(|i| i.to_string()).collect()
}

/// Closure through the cache, recording undecided cases in the report.
fn closed(cache: &mut ClosureCache<'_>, ideal: &Ideal, report: &mut CheckReport) -> Result<Option<Ideal>> {
    let c = cache.get(ideal)?;
    if c.is_none() {
        let label = ideal.to_string();
        if !report.unknown.contains(&label) {
            report.unknown.push(label);
        }
    }
    Ok(c)
}

/// Extension, idempotence and order-preservation on every member (and pair) of `family`.
pub fn check_axioms(cl: &dyn ClosureOperation, family: &[Ideal], budget: &Budget) -> Result<CheckReport> {
    let mut cache = ClosureCache::new(cl, budget);
    let mut report = CheckReport::new("axioms", cl.name());
    let mut closures = Vec::with_capacity(family.len());
    for i in family {
        report.cases += 1;
        let c = closed(&mut cache, i, &mut report)?;
        if let Some(c) = &c {
            if !i.is_subset(c) {
                report.violate("extension", show(&[i, c]));
            }
            if let Some(cc) = closed(&mut cache, c, &mut report)? {
                if cc != *c {
                    report.violate("idempotence", show(&[i, c, &cc]));
                }
            }
        }
        closures.push(c);
    }
    for (a, j) in family.iter().enumerate() {
        for (b, i) in family.iter().enumerate() {
            if a == b || !j.is_subset(i) {
                continue;
            }
            report.cases += 1;
            if let (Some(cj), Some(ci)) = (&closures[a], &closures[b]) {
                if !cj.is_subset(ci) {
                    report.violate("order-preservation", show(&[j, i, cj, ci]));
                }
            }
        }
    }
    Ok(report)
}

/// The basic consequences of the axioms: intersections of closed ideals are
/// closed, `cl(I) ∩ cl(J)` is closed, `cl(I)` is the least closed ideal over `I`
/// (relative to the closed ideals visible from the family), and
/// `cl(cl(I) + cl(J)) = cl(I + J)`.
pub fn check_basics(cl: &dyn ClosureOperation, family: &[Ideal], budget: &Budget) -> Result<CheckReport> {
    let mut cache = ClosureCache::new(cl, budget);
    let mut report = CheckReport::new("basics", cl.name());
    let mut closures = Vec::with_capacity(family.len());
    for i in family {
        closures.push(closed(&mut cache, i, &mut report)?);
    }
    let is_closed: Vec<bool> = family.iter().zip(&closures).map(|(i, c)| c.as_ref() == Some(i)).collect();

    for a in 0..family.len() {
        for b in a..family.len() {
            report.cases += 1;
            let (i, j) = (&family[a], &family[b]);
            if is_closed[a] && is_closed[b] {
                let k = i.intersection(j)?;
                if let Some(ck) = closed(&mut cache, &k, &mut report)? {
                    if ck != k {
                        report.violate("intersection-of-closed", show(&[i, j, &k, &ck]));
                    }
                }
            }
            if let (Some(ci), Some(cj)) = (&closures[a], &closures[b]) {
                let k = ci.intersection(cj)?;
                if let Some(ck) = closed(&mut cache, &k, &mut report)? {
                    if ck != k {
                        report.violate("intersection-of-closures", show(&[i, j, &k, &ck]));
                    }
                }
                let lhs = closed(&mut cache, &ci.sum(cj)?, &mut report)?;
                let rhs = closed(&mut cache, &i.sum(j)?, &mut report)?;
                if let (Some(lhs), Some(rhs)) = (lhs, rhs) {
                    if lhs != rhs {
                        report.violate("sum-identity", show(&[i, j, &lhs, &rhs]));
                    }
                }
            }
        }
    }

    // family-relative: the closed ideals we can see are the closed members and all closures
    let mut visible: Vec<Ideal> = family.iter().zip(&is_closed).filter(|(_, c)| **c).map(|(i, _)| i.clone()).collect();
    visible.extend(closures.iter().flatten().cloned());
    for (i, c) in family.iter().zip(&closures) {
        let Some(c) = c else { continue };
        report.cases += 1;
        for k in &visible {
            if i.is_subset(k) && !c.is_subset(k) {
                report.violate("least-closed-over", show(&[i, c, k]));
            }
        }
    }
    Ok(report)
}

/// `I · cl(J) ⊆ cl(IJ)` for each pair `(I, J)`.
pub fn semiprime_check(cl: &dyn ClosureOperation, pairs: &[(Ideal, Ideal)], budget: &Budget) -> Result<CheckReport> {
    let mut cache = ClosureCache::new(cl, budget);
    let mut report = CheckReport::new("semiprime", cl.name());
    for (i, j) in pairs {
        report.cases += 1;
        let cj = closed(&mut cache, j, &mut report)?;
        let ij = i.product(j)?;
        let cij = closed(&mut cache, &ij, &mut report)?;
        if let (Some(cj), Some(cij)) = (cj, cij) {
            let lhs = i.product(&cj)?;
            if !lhs.is_subset(&cij) {
                report.violate("semi-prime", show(&[i, j, &lhs, &cij]));
            }
        }
    }
    Ok(report)
}

/// `(0 : x) = 0`.
pub fn is_nonzerodivisor(x: &Poly) -> Result<bool> {
    let zero = Ideal::zero(x.ring());
    Ok(!x.is_zero() && zero.colon_poly(x)?.is_zero())
}

fn require_nonzerodivisor(x: &Poly) -> Result<()> {
    if !is_nonzerodivisor(x)? {
        return Err(Error::ZeroDivisor(x.to_string()));
    }
    Ok(())
}

/// `cl(xJ) = x · cl(J)` for a non-zerodivisor `x`.
pub fn star_check(cl: &dyn ClosureOperation, j: &Ideal, x: &Poly, budget: &Budget) -> Result<CheckReport> {
    require_nonzerodivisor(x)?;
    let mut cache = ClosureCache::new(cl, budget);
    let mut report = CheckReport::new("star", cl.name());
    report.cases = 1;
    let lhs = closed(&mut cache, &j.scale(x)?, &mut report)?;
    let cj = closed(&mut cache, j, &mut report)?;
    if let (Some(lhs), Some(cj)) = (lhs, cj) {
        let rhs = cj.scale(x)?;
        if lhs != rhs {
            report.violate("star", vec![j.to_string(), x.to_string(), lhs.to_string(), rhs.to_string()]);
        }
    }
    Ok(report)
}

/// Property (#): `cl(I) = (cl(xI) : x)` for a non-zerodivisor `x`.
pub fn hash_property_check(cl: &dyn ClosureOperation, i: &Ideal, x: &Poly, budget: &Budget) -> Result<CheckReport> {
    require_nonzerodivisor(x)?;
    let mut cache = ClosureCache::new(cl, budget);
    let mut report = CheckReport::new("hash", cl.name());
    report.cases = 1;
    let lhs = closed(&mut cache, i, &mut report)?;
    let cxi = closed(&mut cache, &i.scale(x)?, &mut report)?;
    if let (Some(lhs), Some(cxi)) = (lhs, cxi) {
        let rhs = cxi.colon_poly(x)?;
        if lhs != rhs {
            report.violate("hash", vec![i.to_string(), x.to_string(), lhs.to_string(), rhs.to_string()]);
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Order {
    Equal,
    Less,
    Greater,
    Incomparable,
    Unknown,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Order::Equal => "=",
            Order::Less => "<=",
            Order::Greater => ">=",
            Order::Incomparable => "incomparable",
            Order::Unknown => "unknown",
        })
    }
}

/// Family-relative comparison of two closures. `not_le` lists the ideals with
/// `cl1(I) ⊄ cl2(I)`, `not_ge` those with `cl2(I) ⊄ cl1(I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub order: Order,
    pub not_le: Vec<Ideal>,
    pub not_ge: Vec<Ideal>,
    pub undecided: Vec<Ideal>,
}

pub fn compare(
    cl1: &dyn ClosureOperation,
    cl2: &dyn ClosureOperation,
    family: &[Ideal],
    budget: &Budget,
) -> Result<Comparison> {
    let mut c1 = ClosureCache::new(cl1, budget);
    let mut c2 = ClosureCache::new(cl2, budget);
    let (mut not_le, mut not_ge, mut undecided) = (Vec::new(), Vec::new(), Vec::new());
    for i in family {
        match (c1.get(i)?, c2.get(i)?) {
            (Some(a), Some(b)) => {
                if !a.is_subset(&b) {
                    not_le.push(i.clone());
                }
                if !b.is_subset(&a) {
                    not_ge.push(i.clone());
                }
            }
            _ => undecided.push(i.clone()),
        }
    }
    let order = match (not_le.is_empty(), not_ge.is_empty()) {
        (false, false) => Order::Incomparable,
        _ if !undecided.is_empty() => Order::Unknown,
        (true, true) => Order::Equal,
        (true, false) => Order::Less,
        (false, true) => Order::Greater,
    };
    Ok(Comparison { order, not_le, not_ge, undecided })
}
