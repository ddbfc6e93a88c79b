//! Concrete closure operations and the preclosures that fail one axiom.

mod delta;
mod frobenius;
pub mod monomial;
mod newton;
mod preclosure;
mod vop;

use std::sync::Arc;

pub use delta::{Delta, DeltaSystem};
pub use frobenius::{frobenius_special_part, Frobenius, FrobeniusCertificate, FrobeniusSpecialPart, FrobeniusStage};
pub use newton::{integral_membership_oracle, integral_special_part_member, IntegralClosure, NewtonPolyhedron};
pub use preclosure::{
    preclosure_suite, ratliff_rush_order_search, ratliff_rush_stage, Axiom, ColonBy, FailureCertificate, Preclosure,
    RatliffRush, Unmixed,
};
pub use vop::VOperation;

use crate::closure::{Budget, ClosureOperation, Flags, Verdict};
use crate::error::{Error, Result, UnknownReason};
use crate::finite::FiniteRing;
use crate::groebner::Ideal;
use crate::poly::{Field, Poly, Ring};

/// The materialized ring when `ring` is a finite quotient over `F_p` within the size cap.
pub(crate) fn finite_context(ring: &Arc<Ring>) -> Option<Arc<FiniteRing>> {
    if !matches!(ring.field(), Field::Prime(_)) || !ring.is_quotient() || !ring.is_zero_dimensional() {
        return None;
    }
    FiniteRing::cached(ring).ok()
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Identity;

impl ClosureOperation for Identity {
    fn name(&self) -> String {
        "identity".into()
    }

    fn close(&self, ideal: &Ideal, _budget: &Budget) -> Result<Ideal> {
        Ok(ideal.clone())
    }

    fn flags(&self) -> Flags {
        Flags { claims_semiprime: true, ..Flags::default() }
    }
}

/// Every ideal closes to the whole ring.
#[derive(Clone, Copy, Debug, Default)]
pub struct Indiscrete;

impl ClosureOperation for Indiscrete {
    fn name(&self) -> String {
        "indiscrete".into()
    }

    fn close(&self, ideal: &Ideal, _budget: &Budget) -> Result<Ideal> {
        Ok(Ideal::unit(ideal.ring()).with_gb_limits(ideal.limits()))
    }

    fn flags(&self) -> Flags {
        Flags { claims_semiprime: true, ..Flags::default() }
    }
}

/// `√I`. Closures are computed on finite rings (as the stable preimage of `I`
/// under iterated Frobenius) and for monomial ideals (squarefree parts);
/// membership is decided everywhere with the Rabinowitsch trick.
#[derive(Clone, Copy, Debug, Default)]
pub struct Radical;

impl Radical {
    fn finite(fr: &FiniteRing, ideal: &Ideal) -> Result<Ideal> {
        let frob = fr.frobenius_power(1);
        let mut current = fr.subspace_of(ideal)?;
        loop {
            let next = current.preimage(&frob);
            if next == current {
                return Ok(fr.ideal_of(&current));
            }
            current = next;
        }
    }
}

impl ClosureOperation for Radical {
    fn name(&self) -> String {
        "radical".into()
    }

    fn close(&self, ideal: &Ideal, _budget: &Budget) -> Result<Ideal> {
        if ideal.is_unit() {
            return Ok(ideal.clone());
        }
        if let Some(fr) = finite_context(ideal.ring()) {
            return Radical::finite(&fr, ideal);
        }
        // √(I + J) in the ambient ring, then back to R
        let Some(gens) = ideal.monomial_generators() else {
            return Err(Error::Undecided(UnknownReason::NotImplemented));
        };
        let ring = ideal.ring();
        let polys = gens
            .iter()
            .map(|m| Poly::monomial(&ring.ambient(), m.squarefree_part()).project(ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::with_limits(ring, polys, ideal.limits())
    }

    fn member(&self, f: &Poly, ideal: &Ideal, _budget: &Budget) -> Result<Verdict> {
        Ok(Verdict::from_bool(ideal.radical_contains(f)?))
    }

    fn flags(&self) -> Flags {
        Flags { claims_semiprime: true, ..Flags::default() }
    }
}

/// `(I : 𝔞^∞)`.
#[derive(Clone, Debug)]
pub struct Saturation {
    a: Ideal,
}

impl Saturation {
    pub fn new(a: Ideal) -> Saturation {
        Saturation { a }
    }
}

impl ClosureOperation for Saturation {
    fn name(&self) -> String {
        format!("sat({})", self.a)
    }

    fn close(&self, ideal: &Ideal, _budget: &Budget) -> Result<Ideal> {
        ideal.saturation(&self.a)
    }

    fn flags(&self) -> Flags {
        Flags { claims_semiprime: true, ..Flags::default() }
    }
}

/// `(I m : m)` with `m` the ideal of the variables, or a supplied ideal.
#[derive(Clone, Debug, Default)]
pub struct BasicallyFull {
    m: Option<Ideal>,
}

impl BasicallyFull {
    pub fn new() -> BasicallyFull {
        BasicallyFull { m: None }
    }

    pub fn with_maximal(m: Ideal) -> BasicallyFull {
        BasicallyFull { m: Some(m) }
    }
}

impl ClosureOperation for BasicallyFull {
    fn name(&self) -> String {
        "bf".into()
    }

    fn close(&self, ideal: &Ideal, _budget: &Budget) -> Result<Ideal> {
        let m = match &self.m {
            Some(m) => m.clone(),
            None => Ideal::variables(ideal.ring()).with_gb_limits(ideal.limits()),
        };
        ideal.product(&m)?.colon(&m)
    }

    fn flags(&self) -> Flags {
        Flags { claims_semiprime: true, ..Flags::default() }
    }
}
