//! Acceptance gate. Prints one line per criterion and exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::*;
use idealclose::closure::{
    compare, semiprime_check, Budget, ClosureOp, ClosureOperation, DirectedUnion, FiniteType, IdempotentHull,
    Intersection, ModuleClosure, Order, Verdict,
};
use idealclose::finite::{family_check, persistence_check, FiniteRing, IdealLattice};
use idealclose::groebner::{Ideal, RingMap};
use idealclose::poly::{parse_poly, Field, Monomial, Poly, Ring};
use idealclose::reductions::{minimal_reductions, special_decomposition_check, special_part_axioms, Spread};
use idealclose::standard::{
    preclosure_suite, ratliff_rush_stage, BasicallyFull, ColonBy, Delta, DeltaSystem, Frobenius, FrobeniusSpecialPart,
    FrobeniusStage, Identity, Indiscrete, IntegralClosure, NewtonPolyhedron, Radical, Saturation, Unmixed, VOperation,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn budget() -> Budget {
    Budget::default()
}

fn qq(vars: &[&str]) -> Arc<Ring> {
    Ring::polynomial(Field::Rational, vars).unwrap()
}

fn ideal(ring: &Arc<Ring>, gens: &[&str]) -> Ideal {
    Ideal::parse(ring, gens).unwrap()
}

fn poly(ring: &Arc<Ring>, text: &str) -> Poly {
    parse_poly(ring, text).unwrap()
}

fn fr_of(l: &IdealLattice) -> &FiniteRing {
    l.ring().as_ref()
}

fn v_operation_counterexample() -> Outcome {
    let b = budget();
    let l = lattice(2, &["x", "y"], &["x^2", "x*y", "y^2"]);
    let r = l.ring().ring().clone();
    let m = Ideal::variables(&r);
    let m2 = ok(m.product(&m))?;
    ensure!(ok(VOperation.close(&m, &b))? == Ideal::unit(&r), "m_v is not R");
    ensure!(ok(VOperation.close(&m2, &b))? == Ideal::zero(&r), "(m^2)_v is not 0");
    let report = ok(semiprime_check(&VOperation, &[(m.clone(), m.clone())], &b))?;
    ensure!(report.has_violation("semi-prime"), "no semi-prime violation at (m, m)");

    let fr = fr_of(&l);
    let m_set = elements_of(fr, &m);
    let m_v = v_closure(fr, &m_set);
    let mm_v = v_closure(fr, &product(fr, &m_set, &m_set));
    ensure!(!product(fr, &m_set, &m_v).is_subset(&mm_v), "oracle: m * m_v lies inside (mm)_v");
    for i in l.ideals() {
        let engine = elements_of(fr, &ok(VOperation.close(i, &b))?);
        ensure!(engine == v_closure(fr, &elements_of(fr, i)), "v disagrees with the oracle at {i}");
    }
    Ok(format!("m_v = R, (m^2)_v = 0, violation at (m, m); oracle agrees on {} ideals", l.len()))
}

fn basically_full_persistence() -> Outcome {
    let b = budget();
    let r = ring(2, &["x", "y"], &["x^2", "x*y"]);
    let s = ring(2, &["x", "y", "z"], &["x^2", "x*y", "z^2"]);
    let y = ideal(&r, &["y"]);
    let bf = ok(BasicallyFull::new().close(&y, &b))?;
    ensure!(bf == ideal(&r, &["x", "y"]), "bf(y) = {bf}");

    // x ∈ ((y)m : m) by hand: x*x = 0 and x*y = 0
    let ym = ideal(&r, &["y*x", "y*y"]);
    ensure!(["x", "y"].iter().all(|g| ym.contains(&poly(&r, &format!("x*{g}")))), "oracle: x m not in (y) m");

    let inc = ok(RingMap::new(&r, &s, vec![poly(&s, "x"), poly(&s, "y")]))?;
    let report = ok(persistence_check(&inc, &BasicallyFull::new(), &BasicallyFull::new(), &[y], &b))?;
    let witness = report.violations.iter().find(|v| v.witnesses.get(1).map(String::as_str) == Some("x"));
    ensure!(witness.is_some(), "no persistence violation with witness x: {:?}", report.violations);

    let n = Ideal::variables(&s);
    let zx = poly(&s, "z*x");
    let nx = ok(n.scale(&poly(&s, "x")))?;
    let ny = ok(n.scale(&poly(&s, "y")))?;
    ensure!(nx.contains(&zx) && !ny.contains(&zx), "zx is not in nx minus ny");
    Ok("bf(y) = (x, y); persistence fails at x; zx in nx but not ny".into())
}

fn integral_closure() -> Outcome {
    let b = budget();
    let q = qq(&["x", "y"]);
    let i = ideal(&q, &["x^2", "y^2"]);
    ensure!(ok(IntegralClosure.member(&poly(&q, "x*y"), &i, &b))? == Verdict::In, "xy not integral over (x^2, y^2)");
    let closure = ok(IntegralClosure.close(&i, &b))?;
    let gens: Vec<String> = closure.canonical_generators().iter().map(|g| g.to_string()).collect();
    ensure!(closure == ideal(&q, &["x^2", "x*y", "y^2"]), "closure generated by {gens:?}");

    let mut rng = StdRng::seed_from_u64(0x1d3a);
    let (mut decided, mut undecided, mut inside) = (0, 0, 0);
    for _ in 0..240 {
        let n = rng.gen_range(1..=3);
        let names = ["x", "y", "z"];
        let ring = qq(&names[..n]);
        let k = rng.gen_range(1..=3);
        let gens: Vec<Vec<u32>> = (0..k)
            .map(|_| loop {
                let g: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
                if g.iter().any(|&e| e > 0) {
                    break g;
                }
            })
            .collect();
        let u: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
        let monomials: Vec<Monomial> = gens.iter().map(|g| Monomial::new(g.clone())).collect();
        let ideal = ok(Ideal::new(&ring, monomials.iter().map(|m| Poly::monomial(&ring, m.clone())).collect()))?;
        let f = Poly::monomial(&ring, Monomial::new(u.clone()));
        let newton = ok(IntegralClosure.member(&f, &ideal, &b))?;
        let by_search = integral_power_search(&u, &gens, 8);
        let geometric = NewtonPolyhedron::new(n, &monomials).contains(&u);
        ensure!(newton.is_decided(), "membership undecided for {u:?} over {gens:?}");
        ensure!((newton == Verdict::In) == geometric, "verdict and polyhedron differ for {u:?} over {gens:?}");
        if by_search {
            ensure!(newton == Verdict::In, "search finds {u:?} in the closure of {gens:?}, Newton says out");
            decided += 1;
            inside += 1;
        } else if newton == Verdict::Out {
            decided += 1;
        } else {
            undecided += 1;
        }
    }
    ensure!(undecided == 0, "{undecided} Newton memberships not confirmed by search with n <= 8");
    Ok(format!("xy in (x^2, y^2)-; generators (x^2, xy, y^2); 240 random instances, {decided} decided ({inside} in), 0 disagreements"))
}

fn closure_suite(r: &Arc<Ring>, finite: bool) -> Vec<ClosureOp> {
    let x = poly(r, "x");
    let m = Ideal::variables(r);
    let mut ops: Vec<ClosureOp> = vec![
        Arc::new(Identity),
        Arc::new(Indiscrete),
        Arc::new(Radical),
        Arc::new(Saturation::new(ideal(r, &["x"]))),
        Arc::new(Saturation::new(m.clone())),
        Arc::new(BasicallyFull::new()),
        Arc::new(IdempotentHull::new(Arc::new(ColonBy::new(x)))),
        Arc::new(Intersection::new(vec![Arc::new(Radical), Arc::new(BasicallyFull::new())])),
    ];
    if finite {
        let stages: Vec<ClosureOp> = (0..3).map(|e| Arc::new(FrobeniusStage { e }) as ClosureOp).collect();
        ops.extend([
            Arc::new(Frobenius) as ClosureOp,
            Arc::new(Delta::new(DeltaSystem::new(vec![m.clone()]).unwrap())),
            Arc::new(DirectedUnion::new(stages)),
            Arc::new(FiniteType::new(Arc::new(Frobenius))),
            Arc::new(ModuleClosure::Ideal(ideal(r, &["x"]))),
            Arc::new(ModuleClosure::Quotient(ideal(r, &["x^2"]))),
            Arc::new(VOperation),
        ]);
        if r.arity() > 1 {
            ops.push(Arc::new(ModuleClosure::Quotient(ideal(r, &["x*y"]))));
        }
    } else {
        let gens = vec![ideal(r, &["x"]), ideal(r, &["y"])];
        ops.extend([
            Arc::new(IntegralClosure) as ClosureOp,
            Arc::new(Delta::new(DeltaSystem::new(gens).unwrap())),
            Arc::new(ModuleClosure::Ideal(m)),
        ]);
    }
    ops
}

fn monomial_family(q: &Arc<Ring>) -> Vec<Ideal> {
    let gens: [&[&str]; 20] = [
        &[],
        &["1"],
        &["x"],
        &["y"],
        &["x", "y"],
        &["x^2"],
        &["x*y"],
        &["x^2", "y"],
        &["x^2", "x*y"],
        &["x^2", "y^2"],
        &["x^2", "x*y", "y^2"],
        &["x^3", "y^2"],
        &["x^2*y", "x*y^2"],
        &["x^4", "x^3*y", "x*y^3", "y^4"],
        &["x^3", "x*y", "y^3"],
        &["x*y^2"],
        &["x^2", "y^3"],
        &["x^3", "x^2*y", "y^2"],
        &["x^2*y^2"],
        &["x^5", "y^3"],
    ];
    gens.iter().map(|g| ideal(q, g)).collect()
}

fn axiom_suites() -> Outcome {
    let b = budget();
    let mut runs = 0;
    let mut v_flagged = 0;
    let mut families: Vec<(String, Vec<Ideal>, Vec<ClosureOp>)> = small_lattices()
        .into_iter()
        .map(|(name, l)| {
            let r = l.ring().ring().clone();
            (name.to_string(), l.ideals().to_vec(), closure_suite(&r, true))
        })
        .collect();
    let q = qq(&["x", "y"]);
    families.push(("QQ[x,y]".into(), monomial_family(&q), closure_suite(&q, false)));

    for (name, family, ops) in &families {
        for op in ops {
            let report = ok(family_check(family, op.as_ref(), &b))?;
            runs += 1;
            ensure!(report.unknown.is_empty(), "{} on {name}: undecided {:?}", op.name(), report.unknown);
            for v in &report.violations {
                let predicted = op.name() == "vop" && v.kind == "semi-prime";
                ensure!(predicted, "{} on {name}: {} violated at {:?}", op.name(), v.kind, v.witnesses);
            }
            if op.name() == "vop" && report.has_violation("semi-prime") {
                v_flagged += 1;
            }
        }
    }
    ensure!(v_flagged >= 1, "the v-operation was never flagged as not semi-prime");

    // closures checked against element-set oracles on the finite lattices
    for (name, l) in small_lattices() {
        let fr = fr_of(&l);
        let m = maximal(fr);
        let x = elements_of(fr, &ideal(l.ring().ring(), &["x"]));
        for i in l.ideals() {
            let set = elements_of(fr, i);
            let bf = elements_of(fr, &ok(BasicallyFull::new().close(i, &b))?);
            ensure!(bf == colon(fr, &product(fr, &set, &m), &m), "bf disagrees with the oracle at {i} on {name}");
            let sat = elements_of(fr, &ok(Saturation::new(ideal(l.ring().ring(), &["x"])).close(i, &b))?);
            let mut expected = set.clone();
            let mut xn = x.clone();
            for _ in 0..fr.dim() {
                expected.extend(colon(fr, &set, &xn));
                xn = product(fr, &xn, &x);
            }
            ensure!(sat == expected, "saturation disagrees with the oracle at {i} on {name}");
        }
    }
    Ok(format!(
        "{runs} exhaustive runs on 3 lattices and 20 monomial ideals; only v fails semi-primality ({v_flagged} rings)"
    ))
}

fn preclosures() -> Outcome {
    let b = budget();
    let chain = ring(2, &["x"], &["x^3"]);
    let colon_x = ColonBy::new(poly(&chain, "x"));
    let x2 = ideal(&chain, &["x^2"]);
    let once = ok(colon_x.close(&x2, &b))?;
    let twice = ok(colon_x.close(&once, &b))?;
    ensure!(once == ideal(&chain, &["x"]), "(x^2 : x) = {once}");
    ensure!(twice == Ideal::unit(&chain) && twice != once, "((x^2 : x) : x) = {twice}");

    let fr = FiniteRing::cached(&chain).unwrap();
    let x_set = elements_of(&fr, &ideal(&chain, &["x"]));
    let by_hand = colon(&fr, &colon(&fr, &elements_of(&fr, &x2), &x_set), &x_set);
    ensure!(by_hand == whole(&fr), "oracle: ((x^2 : x) : x) is not R");

    let q = qq(&["x", "y"]);
    let j = ideal(&q, &["x^2", "x*y"]);
    let i = ideal(&q, &["x^2", "x*y", "y^2"]);
    let unm = ok(Unmixed.close(&j, &b))?;
    ensure!(unm == ideal(&q, &["x"]), "unm(J) = {unm}");
    ensure!(j.is_subset(&i) && !unm.is_subset(&ok(Unmixed.close(&i, &b))?), "unm(J) lies inside unm(I)");
    ensure!(!unm.is_subset(&i), "(x) lies inside (x^2, xy, y^2)");

    let suite = ok(preclosure_suite())?;
    for p in &suite {
        ensure!(ok(p.verify(&b))?, "{} fails beyond its certificate", p.op.name());
    }
    Ok("((x^2:x):x) = R, unm(x^2, xy) = (x) not in (x^2, xy, y^2); other axioms hold".into())
}

fn construction_coherence() -> Outcome {
    let b = budget();
    let mut compared = 0;
    for (name, l) in small_lattices() {
        let r = l.ring().ring().clone();
        let m = Ideal::variables(&r);
        let family = l.ideals();
        let equal = |a: &dyn ClosureOperation, c: &dyn ClosureOperation| -> Result<(), String> {
            let cmp = ok(compare(a, c, family, &b))?;
            ensure!(cmp.order == Order::Equal, "{} vs {} on {name}: {}", a.name(), c.name(), cmp.order);
            Ok(())
        };
        let x = poly(&r, "x");
        equal(&Saturation::new(ideal(&r, &["x"])), &IdempotentHull::new(Arc::new(ColonBy::new(x))))?;
        equal(&BasicallyFull::new(), &ModuleClosure::Ideal(m.clone()))?;
        let delta = Delta::new(DeltaSystem::new(vec![m.clone()]).unwrap());
        let powers: Vec<ClosureOp> =
            (1..=4).map(|n| Arc::new(ModuleClosure::Ideal(m.power(n).unwrap())) as ClosureOp).collect();
        equal(&delta, &DirectedUnion::new(powers))?;
        let stages: Vec<ClosureOp> = (0..=3).map(|e| Arc::new(FrobeniusStage { e }) as ClosureOp).collect();
        equal(&Frobenius, &DirectedUnion::new(stages))?;
        compared += 4;

        // Δ evaluated directly as a union of (IK : K) over powers of m
        let fr = fr_of(&l);
        let m_set = maximal(fr);
        for i in family {
            let set = elements_of(fr, i);
            let mut direct = set.clone();
            let mut k = m_set.clone();
            for _ in 0..=fr.dim() {
                direct.extend(colon(fr, &product(fr, &set, &k), &k));
                k = product(fr, &k, &m_set);
            }
            let engine = elements_of(fr, &ok(delta.close(i, &b))?);
            ensure!(engine == direct, "delta disagrees with direct evaluation at {i} on {name}");
        }
    }
    Ok(format!("{compared} constructions equal their direct definitions on every ideal of 3 lattices"))
}

fn frobenius_reductions() -> Outcome {
    let b = budget();
    let e_max = 3;
    for (name, l) in small_lattices().into_iter().take(2) {
        let axioms = ok(special_part_axioms(&l, &FrobeniusSpecialPart, &Frobenius, &b))?;
        ensure!(
            axioms.violations.is_empty() && axioms.unknown.is_empty(),
            "special part on {name}: {:?}",
            axioms.violations
        );
        let (dec, reports) = ok(special_decomposition_check(&l, &Frobenius, &FrobeniusSpecialPart, &b))?;
        ensure!(dec.violations.is_empty(), "decomposition on {name}: {:?}", dec.violations);
        ensure!(reports.len() == l.len(), "missing reduction reports on {name}");
        ensure!(reports.iter().all(|r| matches!(r.spread, Spread::Value(_))), "ill-defined spread on {name}");

        let fr = fr_of(&l);
        for i in l.ideals() {
            let set = elements_of(fr, i);
            let f = frobenius_closure(fr, &set, e_max);
            ensure!(elements_of(fr, &ok(Frobenius.close(i, &b))?) == f, "Frobenius closure differs at {i} on {name}");
            let sp = frobenius_special(fr, &set, e_max);
            ensure!(
                elements_of(fr, &ok(FrobeniusSpecialPart.close(i, &b))?) == sp,
                "special part differs at {i} on {name}"
            );
            let sum = generated(fr, set.iter().chain(&sp));
            ensure!(sum == f, "oracle: I^F is not I + I^Fsp at {i} on {name}");
        }
    }

    let l = lattice(2, &["x", "y"], &["x^2", "x*y", "y^2"]);
    let m = Ideal::variables(l.ring().ring());
    let report = ok(minimal_reductions(&l, &Frobenius, &m, &b))?;
    let zero = Ideal::zero(l.ring().ring()).to_string();
    let found: Vec<&str> = report.minimal_reductions.iter().map(|r| r.ideal.as_str()).collect();
    ensure!(found == [zero.as_str()], "minimal reductions of m: {found:?}");
    ensure!(report.spread == Spread::Value(0), "spread of m: {:?}", report.spread);
    ensure!(report.core == zero, "core of m: {}", report.core);

    // recomputed from scratch over element sets
    let fr = fr_of(&l);
    let m_set = maximal(fr);
    let m_f = frobenius_closure(fr, &m_set, e_max);
    let reductions: Vec<ElemSet> =
        all_ideals(fr).into_iter().filter(|j| j.is_subset(&m_set) && frobenius_closure(fr, j, e_max) == m_f).collect();
    let minimal: Vec<&ElemSet> =
        reductions.iter().filter(|j| !reductions.iter().any(|k| k != *j && k.is_subset(j))).collect();
    ensure!(minimal.len() == 1 && minimal[0].len() == 1, "oracle: minimal reductions of m are not {{(0)}}");
    ensure!(mu(fr, minimal[0]) == 0, "oracle: spread of m is not 0");
    let core: BTreeSet<Elem> = minimal.iter().fold(m_set.clone(), |acc, j| acc.intersection(j).cloned().collect());
    ensure!(core.len() == 1, "oracle: core of m is not (0)");
    Ok("Frobenius special part axioms, I^F = I + I^Fsp and well-defined spreads on 2 lattices; m: {(0)}, spread 0, core (0)".into())
}

fn radical_correctness() -> Outcome {
    let b = budget();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut inside = 0;
    for _ in 0..100 {
        let n = rng.gen_range(2..=3);
        let names = ["x", "y", "z"];
        let ring = qq(&names[..n]);
        let k = rng.gen_range(1..=3);
        let gens: Vec<Poly> = (0..k)
            .map(|_| {
                let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
                Poly::monomial(&ring, Monomial::new(e))
            })
            .collect();
        let i = ok(Ideal::new(&ring, gens))?;
        let terms = rng.gen_range(1..=3);
        let mut f = Poly::zero(&ring);
        for _ in 0..terms {
            let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
            let c = [-3i64, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
            f = &f + &Poly::monomial(&ring, Monomial::new(e)).scale(&Field::Rational.from_i64(c));
        }
        let rabinowitsch = ok(Radical.member(&f, &i, &b))? == Verdict::In;
        let squarefree = ok(Radical.close(&i, &b))?.contains(&f);
        let search = radical_power_search(&f, &i, 12);
        ensure!(rabinowitsch == squarefree && squarefree == search, "disagreement at {f} over {i}");
        inside += rabinowitsch as usize;
    }

    let rings = [
        ring(2, &["x", "y"], &["x^2", "x*y", "y^2"]),
        ring(2, &["x"], &["x^3"]),
        ring(2, &["x", "y"], &["x^2", "y^2"]),
        ring(3, &["x"], &["x^3"]),
        ring(2, &["x"], &["x^2 + x"]),
        ring(3, &["x", "y"], &["x^2", "y^2 - 1"]),
    ];
    for r in &rings {
        let fr = FiniteRing::cached(r).unwrap();
        let engine = elements_of(&fr, &ok(Radical.close(&Ideal::zero(r), &b))?);
        ensure!(engine == nilradical(&fr), "0^radical is not the nilradical of {r}");
    }
    Ok(format!("100 random instances agree ({inside} in); 0^radical = nilradical on {} finite rings", rings.len()))
}

fn ratliff_rush() -> Outcome {
    let q = qq(&["x", "y"]);
    let i = ideal(&q, &["x^4", "x^3*y", "x*y^3", "y^4"]);
    let target = poly(&q, "x^2*y^2");
    let stage = ok(ratliff_rush_stage(&i, 1))?;
    ensure!(stage.contains(&target), "x^2 y^2 is not in (I^2 : I)");
    ensure!(!i.contains(&target), "x^2 y^2 already lies in I");

    let gens: Vec<Vec<u32>> = vec![vec![4, 0], vec![3, 1], vec![1, 3], vec![0, 4]];
    let square: Vec<Vec<u32>> = gens.iter().flat_map(|a| gens.iter().map(|c| exp_sum(a, c))).collect();
    ensure!(gens.iter().all(|g| divisible(&exp_sum(&[2, 2], g), &square)), "oracle: x^2 y^2 I is not in I^2");
    ensure!(!divisible(&[2, 2], &gens), "oracle: x^2 y^2 lies in I");
    Ok("x^2 y^2 in (I^2 : I) and not in I".into())
}

fn sessions_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("sessions")
}

fn run_cli(session: &Path, json: &Path) -> Result<(i32, Vec<u8>), String> {
    let status =
        ok(Command::new(env!("CARGO_BIN_EXE_idealclose")).arg("run").arg(session).arg("--json").arg(json).output())?
            .status;
    let bytes = ok(std::fs::read(json))?;
    Ok((status.code().unwrap_or(-1), bytes))
}

fn cli_determinism() -> Outcome {
    let scratch = std::env::temp_dir().join(format!("idealclose-acceptance-{}", std::process::id()));
    ok(std::fs::create_dir_all(&scratch))?;
    let mut names: Vec<PathBuf> = ok(std::fs::read_dir(sessions_dir()))?.map(|e| e.unwrap().path()).collect();
    names.sort();
    let mut flipped = 0;
    for path in &names {
        let name = path.file_name().unwrap().to_string_lossy().to_string();
        let (code1, out1) = run_cli(path, &scratch.join("first.jsonl"))?;
        let (code2, out2) = run_cli(path, &scratch.join("second.jsonl"))?;
        ensure!(code1 == 0 && code2 == 0, "{name} exits {code1}");
        ensure!(out1 == out2 && !out1.is_empty(), "{name}: reports differ between runs");
        let text = ok(std::fs::read_to_string(path))?;
        if let Some(at) = text.find(" expect violation") {
            let stripped = format!("{}{}", &text[..at], &text[at + " expect violation".len()..]);
            let copy = scratch.join(&name);
            ok(std::fs::write(&copy, stripped))?;
            let (code, _) = run_cli(&copy, &scratch.join("stripped.jsonl"))?;
            ensure!(code != 0, "{name} still exits 0 without its first expectation");
            flipped += 1;
        }
    }
    let _ = std::fs::remove_dir_all(&scratch);
    Ok(format!(
        "{} sessions byte-identical across runs and exit 0; {flipped} flip when an expectation is removed",
        names.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("v-operation counterexample", v_operation_counterexample),
        ("basically full closure does not persist", basically_full_persistence),
        ("integral closure of monomial ideals", integral_closure),
        ("axiom suites", axiom_suites),
        ("not-quite-closures", preclosures),
        ("construction coherence", construction_coherence),
        ("Frobenius special part, reductions and spread", frobenius_reductions),
        ("radical correctness", radical_correctness),
        ("Ratliff-Rush stage", ratliff_rush),
        ("CLI determinism", cli_determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, (title, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: pass: {title}: {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: fail: {title}: {why}", n + 1);
            }
        }
    }
    println!("{}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
