use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::monomial::{self, monomial_gens, monomial_ideal};
use crate::closure::{check_axioms, Budget, ClosureOp, ClosureOperation, Flags};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{parse_poly, Field, Monomial, Poly, Ring};

/// `I ↦ (I : f)`: extensive and order-preserving, not idempotent.
#[derive(Clone, Debug)]
pub struct ColonBy {
    f: Poly,
}

impl ColonBy {
    pub fn new(f: Poly) -> ColonBy {
        ColonBy { f }
    }
}

impl ClosureOperation for ColonBy {
    fn name(&self) -> String {
        format!("colon({})", self.f)
    }

    fn close(&self, ideal: &Ideal, _budget: &Budget) -> Result<Ideal> {
        ideal.colon_poly(&self.f)
    }

    fn flags(&self) -> Flags {
        Flags { preclosure: true, ..Flags::default() }
    }
}

/// Unmixed part of a monomial ideal: the intersection of its primary
/// components of minimal codimension. Not order-preserving.
#[derive(Clone, Copy, Debug, Default)]
pub struct Unmixed;

impl ClosureOperation for Unmixed {
    fn name(&self) -> String {
        "unmixed".into()
    }

    fn close(&self, ideal: &Ideal, _budget: &Budget) -> Result<Ideal> {
        let gens = monomial_gens(ideal)?;
        if gens.is_empty() {
            return Ok(ideal.clone());
        }
        monomial_ideal(ideal.ring(), &monomial::unmixed_part(&gens, ideal.ring().arity()))
    }

    fn flags(&self) -> Flags {
        Flags { preclosure: true, ..Flags::default() }
    }
}

/// `(I^{n+1} : I^n)` for a monomial ideal.
pub fn ratliff_rush_stage(ideal: &Ideal, n: u32) -> Result<Ideal> {
    let gens = monomial_gens(ideal)?;
    let arity = ideal.ring().arity();
    let big = monomial::power(&gens, n + 1, arity);
    let small = monomial::power(&gens, n, arity);
    monomial_ideal(ideal.ring(), &monomial::colon(&big, &small, arity))
}

/// Ratliff–Rush operation truncated at `n_max`: `∪_{n ≤ n_max} (I^{n+1} : I^n)`
/// on monomial ideals. The stages ascend, so this is a lower bound for the full union.
#[derive(Clone, Copy, Debug, Default)]
pub struct RatliffRush;

impl ClosureOperation for RatliffRush {
    fn name(&self) -> String {
        "ratliffrush".into()
    }

    fn close(&self, ideal: &Ideal, budget: &Budget) -> Result<Ideal> {
        let gens = monomial_gens(ideal)?;
        if gens.is_empty() {
            return Ok(ideal.clone());
        }
        let mut acc = ideal.clone();
        for n in 1..=budget.n_max {
            acc = acc.sum(&ratliff_rush_stage(ideal, n)?)?;
        }
        Ok(acc)
    }

    fn flags(&self) -> Flags {
        Flags { preclosure: true, ..Flags::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Extension,
    Idempotence,
    OrderPreservation,
}

impl Axiom {
    pub fn violation_kind(&self) -> &'static str {
        match self {
            Axiom::Extension => "extension",
            Axiom::Idempotence => "idempotence",
            Axiom::OrderPreservation => "order-preservation",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.violation_kind())
    }
}

/// Ideals exhibiting the failure of one axiom. For extension and idempotence
/// the witness is `[I]`; for order-preservation it is `[J, I]` with `J ⊆ I`.
#[derive(Clone, Debug)]
pub struct FailureCertificate {
    pub axiom: Axiom,
    pub witnesses: Vec<Ideal>,
}

impl FailureCertificate {
    /// Recomputes the failure from scratch.
    pub fn verify(&self, op: &dyn ClosureOperation, budget: &Budget) -> Result<bool> {
        match (self.axiom, self.witnesses.as_slice()) {
            (Axiom::Extension, [i]) => Ok(!i.is_subset(&op.close(i, budget)?)),
            (Axiom::Idempotence, [i]) => {
                let c = op.close(i, budget)?;
                Ok(op.close(&c, budget)? != c)
            }
            (Axiom::OrderPreservation, [j, i]) => {
                Ok(j.is_subset(i) && !op.close(j, budget)?.is_subset(&op.close(i, budget)?))
            }
            _ => Err(Error::invalid("malformed failure certificate")),
        }
    }
}

/// An operation known to fail one closure axiom, with a certificate of the
/// failure and a family on which the other two axioms are tested.
pub struct Preclosure {
    pub op: ClosureOp,
    pub certificate: FailureCertificate,
    pub family: Vec<Ideal>,
}

impl Preclosure {
    /// The certificate verifies, and the family shows no violation of any other axiom.
    pub fn verify(&self, budget: &Budget) -> Result<bool> {
        if !self.certificate.verify(self.op.as_ref(), budget)? {
            return Ok(false);
        }
        let report = check_axioms(self.op.as_ref(), &self.family, budget)?;
        let expected = self.certificate.axiom.violation_kind();
        Ok(report.unknown.is_empty() && report.violations.iter().all(|v| v.kind == expected))
    }
}

/// Colon by `x` on `F_2[x]/(x^3)` (idempotence fails at `(x^2)`) and the unmixed
/// part on `QQ[x,y]` (order-preservation fails at `(x^2, xy) ⊆ (x^2, xy, y^2)`).
/// The Ratliff–Rush operation gets a certificate from `ratliff_rush_order_search`.
pub fn preclosure_suite() -> Result<Vec<Preclosure>> {
    let base = Ring::polynomial(Field::prime(2)?, &["x"])?;
    let chain = Ring::quotient_str(&base, &["x^3"])?;
    let x = parse_poly(&chain, "x")?;
    let chain_family =
        vec![Ideal::zero(&chain), Ideal::parse(&chain, &["x^2"])?, Ideal::parse(&chain, &["x"])?, Ideal::unit(&chain)];
    let colon = Preclosure {
        op: Arc::new(ColonBy::new(x)),
        certificate: FailureCertificate { axiom: Axiom::Idempotence, witnesses: vec![chain_family[1].clone()] },
        family: chain_family,
    };

    let q = Ring::polynomial(Field::Rational, &["x", "y"])?;
    let j = Ideal::parse(&q, &["x^2", "x*y"])?;
    let i = Ideal::parse(&q, &["x^2", "x*y", "y^2"])?;
    let unmixed_family =
        vec![j.clone(), i.clone(), Ideal::parse(&q, &["x"])?, Ideal::parse(&q, &["x", "y"])?, Ideal::zero(&q)];
    let unmixed = Preclosure {
        op: Arc::new(Unmixed),
        certificate: FailureCertificate { axiom: Axiom::OrderPreservation, witnesses: vec![j, i] },
        family: unmixed_family,
    };
    Ok(vec![colon, unmixed])
}

/// Searches pairs `J ⊆ I` of monomial ideals generated in a single degree `d`
/// for an order-preservation failure of the truncated Ratliff–Rush operation.
/// Returns the first pair found together with a monomial of `J~ ∖ I~`.
pub fn ratliff_rush_order_search(
    ring: &Arc<Ring>,
    max_degree: u32,
    budget: &Budget,
) -> Result<Option<(Ideal, Ideal, Poly)>> {
    if ring.arity() != 2 || ring.is_quotient() {
        return Err(Error::invalid("the search runs in a polynomial ring in two variables"));
    }
    let op = RatliffRush;
    for d in 2..=max_degree {
        let degree_d: Vec<Monomial> = (0..=d).map(|a| Monomial::new(vec![a, d - a])).collect();
        // subsets containing both pure powers, so the ideals are m-primary
        let inner: Vec<Monomial> = degree_d[1..d as usize].to_vec();
        let subsets: Vec<Vec<Monomial>> = (0u32..1 << inner.len())
            .map(|mask| {
                let mut g = vec![degree_d[0].clone(), degree_d[d as usize].clone()];
                g.extend((0..inner.len()).filter(|b| mask >> b & 1 == 1).map(|b| inner[b].clone()));
                g
            })
            .collect();
        let mut closures: Vec<(Ideal, Ideal)> = Vec::with_capacity(subsets.len());
        for g in &subsets {
            let ideal = monomial_ideal(ring, g)?;
            let c = op.close(&ideal, budget)?;
            closures.push((ideal, c));
        }
        for (j, cj) in &closures {
            for (i, ci) in &closures {
                if j != i && j.is_subset(i) && !cj.is_subset(ci) {
                    let witness = cj.canonical_generators().into_iter().find(|g| !ci.contains(g)).unwrap();
                    return Ok(Some((j.clone(), i.clone(), witness)));
                }
            }
        }
    }
    Ok(None)
}
