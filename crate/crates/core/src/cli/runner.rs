use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use super::ast::*;
use super::parser::parse_session;
use crate::closure::{
    check_axioms, check_basics, compare, hash_property_check, is_nonzerodivisor, semiprime_check, star_check, Budget,
    CheckReport, ClosureOp, ClosureOperation, Contraction, DirectedUnion, FiniteType, IdempotentHull, Intersection,
    ModuleClosure, Order, Verdict,
};
use crate::error::{Error, Result};
use crate::finite::{closed_census, family_check, persistence_check, FiniteRing, IdealLattice, Record};
use crate::groebner::{GbLimits, Ideal, RingMap};
use crate::poly::{parse_poly, MonomialOrder, Poly, Ring};
use crate::reductions::{
    minimal_reductions, nakayama_check, special_decomposition_check, special_part_axioms, MaximalTimes,
};
use crate::standard::{
    BasicallyFull, ColonBy, DeltaSystem, Frobenius, FrobeniusSpecialPart, FrobeniusStage, Saturation, VOperation,
};

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub budget: Budget,
    /// Treat every undecided check as a failure.
    pub strict: bool,
}

/// One executed command and its report line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandRecord {
    pub line: usize,
    pub record: Record,
    pub strict: bool,
}

/// Result of a run. Exit code 0: every record succeeded; 1: some check failed;
/// 2: the session could not be parsed, resolved or executed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub records: Vec<CommandRecord>,
    pub error: Option<String>,
    pub exit_code: i32,
}

impl RunOutcome {
    pub fn jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(&r.record).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    pub fn table(&self) -> String {
        let rows: Vec<[String; 5]> = self
            .records
            .iter()
            .map(|r| {
                [
                    r.line.to_string(),
                    r.record.check.clone(),
                    r.record.closure.clone(),
                    r.record.ring.clone(),
                    r.record.status.clone(),
                ]
            })
            .collect();
        let header = ["line", "check", "closure", "ring", "status"].map(String::from);
        let mut widths = header.clone().map(|h| h.len());
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for row in std::iter::once(&header).chain(&rows) {
            let cells: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            writeln!(out, "{}", cells.join("  ").trim_end()).unwrap();
        }
        if let Some(e) = &self.error {
            writeln!(out, "error: {e}").unwrap();
        }
        let passed = self.records.iter().filter(|r| r.record.is_success(r.strict)).count();
        writeln!(out, "{passed}/{} records ok, exit {}", self.records.len(), self.exit_code).unwrap();
        out
    }
}

/// Parses and runs a session.
pub fn run_text(text: &str, options: &RunOptions) -> RunOutcome {
    match parse_session(text) {
        Ok(s) => run_session(&s, options),
        Err(e) => RunOutcome { records: Vec::new(), error: Some(e.to_string()), exit_code: 2 },
    }
}

/// Resolves every name, then executes the commands in order. The first error
/// aborts the run and names the offending statement.
pub fn run_session(session: &Session, options: &RunOptions) -> RunOutcome {
    let mut env = Env::default();
    for s in &session.statements {
        if let Err(e) = env.define(s) {
            return RunOutcome { records: Vec::new(), error: Some(located(s, &e)), exit_code: 2 };
        }
    }
    let mut records = Vec::new();
    for s in session.statements.iter().filter(|s| s.stmt.is_command()) {
        match env.execute(&s.stmt, &options.budget) {
            Ok(record) => {
                let strict = options.strict || matches!(&s.stmt, Stmt::Check { clauses, .. } if clauses.strict);
                records.push(CommandRecord { line: s.line, record, strict });
            }
            Err(e) => return RunOutcome { records, error: Some(located(s, &e)), exit_code: 2 },
        }
    }
    let ok = records.iter().all(|r| r.record.is_success(r.strict));
    RunOutcome { records, error: None, exit_code: if ok { 0 } else { 1 } }
}

fn located(s: &Statement, e: &Error) -> String {
    format!("line {}: `{}`: {e}", s.line, s.stmt)
}

fn resolve_err(msg: String) -> Error {
    Error::Invalid(msg)
}

/// `f ∈ I` in `ring`, with parse positions shifted to the session column.
fn parse_text(ring: &Arc<Ring>, text: &Text) -> Result<Poly> {
    parse_poly(ring, &text.text).map_err(|e| match e {
        Error::Parse { col, msg, .. } => Error::invalid(format!("column {}: {msg}", text.col + col - 1)),
        other => other,
    })
}

fn parse_ideal(ring: &Arc<Ring>, gens: &[Text]) -> Result<Ideal> {
    let polys = gens.iter().map(|t| parse_text(ring, t)).collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, polys)
}

/// Frobenius closure with its own bound on the exponent search.
struct BoundedFrobenius(u32);

impl ClosureOperation for BoundedFrobenius {
    fn name(&self) -> String {
        format!("frob({})", self.0)
    }

    fn close(&self, ideal: &Ideal, budget: &Budget) -> Result<Ideal> {
        Frobenius.close(ideal, &Budget { e_max: self.0, ..*budget })
    }

    fn member(&self, f: &Poly, ideal: &Ideal, budget: &Budget) -> Result<Verdict> {
        Frobenius.member(f, ideal, &Budget { e_max: self.0, ..*budget })
    }
}

#[derive(Default)]
struct Env {
    rings: HashMap<String, Arc<Ring>>,
    lattices: HashMap<String, Arc<IdealLattice>>,
    ideals: HashMap<String, (Ideal, String)>,
    maps: HashMap<String, RingMap>,
    closures: HashMap<String, ClosureExpr>,
}

impl Env {
    fn ring(&self, name: &str) -> Result<&Arc<Ring>> {
        self.rings.get(name).ok_or_else(|| resolve_err(format!("unknown ring `{name}`")))
    }

    fn ideal(&self, name: &str) -> Result<&(Ideal, String)> {
        self.ideals.get(name).ok_or_else(|| resolve_err(format!("unknown ideal `{name}`")))
    }

    fn map(&self, name: &str) -> Result<&RingMap> {
        self.maps.get(name).ok_or_else(|| resolve_err(format!("unknown map `{name}`")))
    }

    fn ring_name(&self, ring: &Arc<Ring>) -> String {
        let mut names: Vec<&String> = self.rings.iter().filter(|(_, r)| *r == ring).map(|(n, _)| n).collect();
        names.sort();
        names.first().map(|n| n.to_string()).unwrap_or_else(|| ring.to_string())
    }

    fn lattice(&mut self, name: &str) -> Result<Arc<IdealLattice>> {
        if let Some(l) = self.lattices.get(name) {
            return Ok(l.clone());
        }
        let ring = self.ring(name)?.clone();
        let l = Arc::new(IdealLattice::new(FiniteRing::cached(&ring)?)?);
        self.lattices.insert(name.to_string(), l.clone());
        Ok(l)
    }

    fn fresh(&self, kind: &str, name: &str, taken: bool) -> Result<()> {
        if taken {
            return Err(resolve_err(format!("{kind} `{name}` is already defined")));
        }
        Ok(())
    }

    /// Builds definitions and checks that commands only reference known names.
    fn define(&mut self, s: &Statement) -> Result<()> {
        match &s.stmt {
            Stmt::Ring { name, field, vars, order, relations } => {
                self.fresh("ring", name, self.rings.contains_key(name))?;
                let base = Ring::new(*field, vars, order.unwrap_or(MonomialOrder::GrevLex))?;
                let ring = if relations.is_empty() {
                    base
                } else {
                    let rels = relations.iter().map(|t| parse_text(&base, t)).collect::<Result<Vec<_>>>()?;
                    Ring::quotient(&base, &rels)?
                };
                self.rings.insert(name.clone(), ring);
            }
            Stmt::Ideal { name, gens, ring } => {
                self.fresh("ideal", name, self.ideals.contains_key(name))?;
                let r = self.ring(ring)?.clone();
                self.ideals.insert(name.clone(), (parse_ideal(&r, gens)?, ring.clone()));
            }
            Stmt::Map { name, source, target, images } => {
                self.fresh("map", name, self.maps.contains_key(name))?;
                let (src, tgt) = (self.ring(source)?.clone(), self.ring(target)?.clone());
                if images.len() != src.arity() {
                    return Err(resolve_err(format!(
                        "map `{name}` gives {} images for {} variables",
                        images.len(),
                        src.arity()
                    )));
                }
                let mut polys = Vec::with_capacity(images.len());
                for v in src.var_names() {
                    let Some((_, t)) = images.iter().find(|(w, _)| w == v) else {
                        return Err(resolve_err(format!("map `{name}` has no image for `{v}`")));
                    };
                    polys.push(parse_text(&tgt, t)?);
                }
                self.maps.insert(name.clone(), RingMap::new(&src, &tgt, polys)?);
            }
            Stmt::Closure { name, expr } => {
                self.fresh("closure", name, self.closures.contains_key(name))?;
                self.validate(expr)?;
                self.closures.insert(name.clone(), expr.clone());
            }
            Stmt::Check { closure, target, clauses, kind } => {
                self.validate(closure)?;
                self.validate_target(target)?;
                if let Some(m) = &clauses.along {
                    self.map(m)?;
                }
                if let Some(w) = &clauses.with {
                    self.validate(w)?;
                }
                let lattice_only = matches!(kind, CheckKind::Nakayama | CheckKind::Special | CheckKind::Decomposition);
                if lattice_only && !matches!(target, Target::Lattice(_)) {
                    return Err(resolve_err(format!("`{}` checks run on a lattice", kind.keyword())));
                }
                if matches!(kind, CheckKind::Special | CheckKind::Decomposition) && clauses.with.is_none() {
                    return Err(resolve_err(format!("`{}` needs `with` a special part", kind.keyword())));
                }
                if *kind == CheckKind::Persistence && clauses.along.is_none() {
                    return Err(resolve_err("`persistence` needs `along` a map".into()));
                }
            }
            Stmt::Compute { closure, ideal } | Stmt::Member { closure, ideal, .. } => {
                self.validate(closure)?;
                self.ideal(ideal)?;
            }
            Stmt::Report { closure, ideal, ring, .. } => {
                self.validate(closure)?;
                self.ring(ring)?;
                if &self.ideal(ideal)?.1 != ring {
                    return Err(resolve_err(format!("ideal `{ideal}` is not in `{ring}`")));
                }
            }
            Stmt::Census { closure, ring } => {
                self.validate(closure)?;
                self.ring(ring)?;
            }
            Stmt::Compare { left, right, target, .. } => {
                self.validate(left)?;
                self.validate(right)?;
                self.validate_target(target)?;
            }
        }
        Ok(())
    }

    fn validate_target(&self, target: &Target) -> Result<()> {
        match target {
            Target::Lattice(r) => self.ring(r).map(|_| ()),
            Target::Family(names) if names.is_empty() => Err(resolve_err("empty family".into())),
            Target::Family(names) => {
                let ring = &self.ideal(&names[0])?.1;
                for n in names {
                    if &self.ideal(n)?.1 != ring {
                        return Err(Error::RingMismatch);
                    }
                }
                Ok(())
            }
        }
    }

    fn validate(&self, expr: &ClosureExpr) -> Result<()> {
        use ClosureExpr::*;
        let arg = |a: &IdealArg| match a {
            IdealArg::Name(n) => self.ideal(n).map(|_| ()),
            IdealArg::Literal(_) => Ok(()),
        };
        match expr {
            Sat(a) | ModClosure(a) | Quotient(a) => arg(a),
            Delta(gens) => gens.iter().try_for_each(arg),
            Meet(parts) | Union(parts) => parts.iter().try_for_each(|p| self.validate(p)),
            Hull(d) | Cw(d) | Cf(d) => self.validate(d),
            Contract(m, c) => {
                self.map(m)?;
                self.validate(c)
            }
            Ref(n) => {
                if self.closures.contains_key(n) {
                    Ok(())
                } else {
                    Err(resolve_err(format!("unknown closure `{n}`")))
                }
            }
            _ => Ok(()),
        }
    }

    fn ideal_arg(&self, a: &IdealArg, ring: &Arc<Ring>) -> Result<Ideal> {
        match a {
            IdealArg::Name(n) => {
                let i = &self.ideal(n)?.0;
                if i.ring() != ring {
                    return Err(resolve_err(format!("ideal `{n}` lives in another ring")));
                }
                Ok(i.clone())
            }
            IdealArg::Literal(gens) => parse_ideal(ring, gens),
        }
    }

    /// The operation an expression denotes on the ideals of `ring`.
    fn instantiate(&mut self, expr: &ClosureExpr, ring: &Arc<Ring>, budget: &Budget) -> Result<ClosureOp> {
        use ClosureExpr::*;
        Ok(match expr {
            Identity => Arc::new(crate::standard::Identity),
            Indiscrete => Arc::new(crate::standard::Indiscrete),
            Radical => Arc::new(crate::standard::Radical),
            IntClosure => Arc::new(crate::standard::IntegralClosure),
            Bf => Arc::new(BasicallyFull::new()),
            Vop => Arc::new(VOperation),
            Unmixed => Arc::new(crate::standard::Unmixed),
            RatliffRush => Arc::new(crate::standard::RatliffRush),
            FrobSp => Arc::new(FrobeniusSpecialPart),
            MTimes => Arc::new(MaximalTimes::new(Ideal::variables(ring))),
            Frob(None) => Arc::new(Frobenius),
            Frob(Some(e)) => Arc::new(BoundedFrobenius(*e)),
            Stage(e) => Arc::new(FrobeniusStage { e: *e }),
            Sat(a) => Arc::new(Saturation::new(self.ideal_arg(a, ring)?)),
            ModClosure(a) => Arc::new(ModuleClosure::Ideal(self.ideal_arg(a, ring)?)),
            Quotient(a) => Arc::new(ModuleClosure::Quotient(self.ideal_arg(a, ring)?)),
            Colon(f) => Arc::new(ColonBy::new(parse_text(ring, f)?)),
            Delta(gens) => {
                let ideals = gens.iter().map(|g| self.ideal_arg(g, ring)).collect::<Result<Vec<_>>>()?;
                Arc::new(crate::standard::Delta::new(DeltaSystem::new(ideals)?))
            }
            Meet(parts) => Arc::new(Intersection::new(self.instantiate_all(parts, ring, budget)?)),
            Union(parts) => Arc::new(DirectedUnion::new(self.instantiate_all(parts, ring, budget)?)),
            Hull(d) => Arc::new(IdempotentHull::new(self.instantiate(d, ring, budget)?)),
            Cf(c) => Arc::new(FiniteType::new(self.instantiate(c, ring, budget)?)),
            Cw(c) => {
                let inner = self.instantiate(c, ring, budget)?;
                let name = self.ring_name(ring);
                let lattice = match self.rings.get(&name) {
                    Some(_) => self.lattice(&name)?,
                    None => Arc::new(IdealLattice::new(FiniteRing::cached(ring)?)?),
                };
                Arc::new(crate::finite::Cw::new(inner, lattice, budget)?)
            }
            Contract(m, c) => {
                let map = self.map(m)?.clone();
                if map.source() != ring {
                    return Err(resolve_err(format!("map `{m}` does not start at this ring")));
                }
                let inner = self.instantiate(c, &map.target().clone(), budget)?;
                Arc::new(Contraction::new(map, inner))
            }
            Ref(n) => {
                let e = self.closures.get(n).cloned().ok_or_else(|| resolve_err(format!("unknown closure `{n}`")))?;
                self.instantiate(&e, ring, budget)?
            }
        })
    }

    fn instantiate_all(&mut self, parts: &[ClosureExpr], ring: &Arc<Ring>, budget: &Budget) -> Result<Vec<ClosureOp>> {
        parts.iter().map(|p| self.instantiate(p, ring, budget)).collect()
    }

    /// The ideals of a target, with the name of their ring.
    fn family(&mut self, target: &Target) -> Result<(Vec<Ideal>, String, Option<Arc<IdealLattice>>)> {
        match target {
            Target::Lattice(r) => {
                let l = self.lattice(r)?;
                Ok((l.ideals().to_vec(), r.clone(), Some(l)))
            }
            Target::Family(names) => {
                let ideals = names.iter().map(|n| Ok(self.ideal(n)?.0.clone())).collect::<Result<Vec<_>>>()?;
                Ok((ideals, self.ideal(&names[0])?.1.clone(), None))
            }
        }
    }

    fn execute(&mut self, stmt: &Stmt, budget: &Budget) -> Result<Record> {
        let limits = GbLimits { max_terms: budget.monomial_budget };
        match stmt {
            Stmt::Check { kind, closure, target, clauses } => {
                let (family, ring_name, lattice) = self.family(target)?;
                let ring = self.ring(&ring_name)?.clone();
                let op = self.instantiate(closure, &ring, budget)?;
                let mut report =
                    self.check(*kind, closure, op.as_ref(), &family, &ring, lattice.as_deref(), clauses, budget)?;
                report.closure = closure.to_string();
                Ok(Record::from_report(&report, &ring_name, clauses.expect_violation))
            }
            Stmt::Compute { closure, ideal } => {
                let (i, ring_name) = self.ideal(ideal)?.clone();
                let op = self.instantiate(closure, i.ring(), budget)?;
                let (status, witness) = match op.close(&i.with_gb_limits(limits), budget) {
                    Ok(c) => ("pass", format!("{ideal} = {i} -> {c}")),
                    Err(Error::Undecided(r)) => ("unknown", format!("{ideal} = {i} -> undecided ({r})")),
                    Err(e) => return Err(e),
                };
                Ok(record("compute", &ring_name, closure, status, vec![witness]))
            }
            Stmt::Member { poly, closure, ideal } => {
                let (i, ring_name) = self.ideal(ideal)?.clone();
                let f = parse_text(i.ring(), poly)?;
                let op = self.instantiate(closure, i.ring(), budget)?;
                let v = op.member(&f, &i.with_gb_limits(limits), budget)?;
                let status = if v.is_decided() { "pass" } else { "unknown" };
                Ok(record("member", &ring_name, closure, status, vec![format!("{f} {v} {ideal} = {i}")]))
            }
            Stmt::Report { kind, closure, ideal, ring } => {
                let lattice = self.lattice(ring)?;
                let i = self.ideal(ideal)?.0.clone();
                let op = self.instantiate(closure, lattice.ring().ring(), budget)?;
                let mut rec = minimal_reductions(&lattice, op.as_ref(), &i, budget)?
                    .to_record(&format!("report-{}", kind.keyword()), ring);
                rec.closure = closure.to_string();
                rec.witnesses.insert(0, format!("ideal {i}"));
                match kind {
                    ReportKind::Reductions => {}
                    ReportKind::Spread => rec.witnesses.retain(|w| w.starts_with("ideal") || w.starts_with("spread")),
                    ReportKind::Core => {
                        rec.witnesses.retain(|w| w.starts_with("ideal") || w.starts_with("core"));
                        rec.status = "pass".into();
                    }
                }
                Ok(rec)
            }
            Stmt::Census { closure, ring } => {
                let lattice = self.lattice(ring)?;
                let op = self.instantiate(closure, lattice.ring().ring(), budget)?;
                let c = closed_census(&lattice, op.as_ref(), budget)?;
                let show =
                    |ix: &[usize]| ix.iter().map(|&i| lattice.ideal(i).to_string()).collect::<Vec<_>>().join(" ");
                let mut witnesses = vec![
                    format!("closed {} of {}: {}", c.closed.len(), lattice.len(), show(&c.closed)),
                    format!("maximal closed: {}", show(&c.maximal_closed)),
                    format!("maximal closed prime: {:?}", c.maximal_closed_prime),
                    format!("zero closed: {}", c.zero_closed),
                    format!("all closed: {}", c.all_closed),
                ];
                if !c.undecided.is_empty() {
                    witnesses.push(format!("undecided: {}", show(&c.undecided)));
                }
                for (a, b) in &c.non_closed_meets {
                    witnesses.push(format!("meet not closed: {} {}", lattice.ideal(*a), lattice.ideal(*b)));
                }
                let status = if !c.non_closed_meets.is_empty() {
                    "fail"
                } else if !c.undecided.is_empty() {
                    "unknown"
                } else {
                    "pass"
                };
                Ok(record("census", ring, closure, status, witnesses))
            }
            Stmt::Compare { left, right, target, expect } => {
                let (family, ring_name, _) = self.family(target)?;
                let ring = self.ring(&ring_name)?.clone();
                let a = self.instantiate(left, &ring, budget)?;
                let b = self.instantiate(right, &ring, budget)?;
                let cmp = compare(a.as_ref(), b.as_ref(), &family, budget)?;
                let show = |v: &[Ideal]| v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
                let witnesses = vec![
                    format!("order {}", cmp.order),
                    format!("not <=: {}", show(&cmp.not_le)),
                    format!("not >=: {}", show(&cmp.not_ge)),
                ];
                let status = match expect {
                    _ if cmp.order == Order::Unknown => "unknown",
                    Some(o) if !satisfies(cmp.order, *o) => "fail",
                    _ => "pass",
                };
                Ok(Record {
                    check: "compare".into(),
                    ring: ring_name,
                    closure: format!("{left} vs {right}"),
                    status: status.into(),
                    witnesses,
                })
            }
            _ => unreachable!("definitions are not commands"),
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn check(
        &mut self,
        kind: CheckKind,
        expr: &ClosureExpr,
        op: &dyn ClosureOperation,
        family: &[Ideal],
        ring: &Arc<Ring>,
        lattice: Option<&IdealLattice>,
        clauses: &Clauses,
        budget: &Budget,
    ) -> Result<CheckReport> {
        let pairs = || -> Vec<(Ideal, Ideal)> {
            family.iter().flat_map(|i| family.iter().map(move |j| (i.clone(), j.clone()))).collect()
        };
        Ok(match kind {
            CheckKind::Axioms => check_axioms(op, family, budget)?,
            CheckKind::Basics => check_basics(op, family, budget)?,
            CheckKind::Semiprime => semiprime_check(op, &pairs(), budget)?,
            CheckKind::Exhaustive => family_check(family, op, budget)?,
            CheckKind::Star | CheckKind::Hash => {
                let xs = match (&clauses.by, lattice) {
                    (Some(t), _) => vec![parse_text(ring, t)?],
                    (None, Some(l)) => {
                        let fr = l.ring();
                        let mut xs = Vec::new();
                        for v in fr.elements() {
                            let x = fr.poly(&v);
                            if is_nonzerodivisor(&x)? {
                                xs.push(x);
                            }
                        }
                        xs
                    }
                    (None, None) => return Err(resolve_err("a family check of this kind needs `by`".into())),
                };
                let name = if kind == CheckKind::Star { "star" } else { "hash" };
                let mut report = CheckReport::new(name, op.name());
                for i in family {
                    for x in &xs {
                        report.absorb(if kind == CheckKind::Star {
                            star_check(op, i, x, budget)?
                        } else {
                            hash_property_check(op, i, x, budget)?
                        });
                    }
                }
                report
            }
            CheckKind::Persistence => {
                let map = self.map(clauses.along.as_deref().unwrap())?.clone();
                if map.source() != ring {
                    return Err(resolve_err("the family does not live in the source of the map".into()));
                }
                let target_op = self.instantiate(expr, &map.target().clone(), budget)?;
                persistence_check(&map, op, target_op.as_ref(), family, budget)?
            }
            CheckKind::Nakayama => nakayama_check(lattice.unwrap(), op, budget)?,
            CheckKind::Special | CheckKind::Decomposition => {
                let sp_expr = clauses.with.as_ref().unwrap();
                let sp = self.instantiate(sp_expr, ring, budget)?;
                let l = lattice.unwrap();
                if kind == CheckKind::Special {
                    special_part_axioms(l, sp.as_ref(), op, budget)?
                } else {
                    special_decomposition_check(l, op, sp.as_ref(), budget)?.0
                }
            }
        })
    }
}

/// `<=` and `>=` expectations are met by equality too.
fn satisfies(found: Order, expected: Order) -> bool {
    found == expected || (found == Order::Equal && matches!(expected, Order::Less | Order::Greater))
}

fn record(check: &str, ring: &str, closure: &ClosureExpr, status: &str, witnesses: Vec<String>) -> Record {
    Record { check: check.into(), ring: ring.into(), closure: closure.to_string(), status: status.into(), witnesses }
}
