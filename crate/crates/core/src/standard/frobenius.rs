use std::sync::Arc;

use super::finite_context;
use crate::closure::{Budget, ClosureOperation, Flags, Verdict};
use crate::error::{Error, Result, UnknownReason};
use crate::finite::{FiniteRing, Subspace};
use crate::groebner::Ideal;
use crate::poly::Poly;

/// How an exact Frobenius answer is justified on a given ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrobeniusCertificate {
    /// Finite ring: the powers of the Frobenius matrix repeat, and the stages with them.
    FiniteCycle,
    /// Polynomial ring: regular, so Frobenius is flat and every ideal is Frobenius closed.
    Regular,
}

fn certificate(ideal: &Ideal) -> Result<Option<FrobeniusCertificate>> {
    let ring = ideal.ring();
    if ring.characteristic() == 0 {
        return Err(Error::CharacteristicZero("Frobenius closure"));
    }
    if !ring.is_quotient() {
        return Ok(Some(FrobeniusCertificate::Regular));
    }
    Ok(finite_context(ring).map(|_| FrobeniusCertificate::FiniteCycle))
}

/// `{f | f^q ∈ W_e(I)}` on a finite ring, where `q = p^e` and `W_e` is computed from `F^e`.
fn finite_stage(fr: &FiniteRing, space: &Subspace, power: &[Vec<u32>], special: bool) -> Subspace {
    let mut target = fr.bracket(power, space);
    if special {
        let m = fr.maximal_ideal().expect("local ring");
        target = fr.ideal_product(m, &target);
    }
    target.preimage(power)
}

/// The eventual (stable) value of the ascending stages on a finite ring.
fn finite_limit(fr: &FiniteRing, space: &Subspace, special: bool) -> Subspace {
    let (powers, e0) = fr.frobenius_cycle();
    let stable = finite_stage(fr, space, &powers[e0], special);
    debug_assert!(powers.iter().all(|p| finite_stage(fr, space, p, special).is_subset(&stable)));
    stable
}

/// Frobenius closure `I^F = {f | f^q ∈ I^{[q]} for some q = p^e}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Frobenius;

impl Frobenius {
    pub fn certificate(ideal: &Ideal) -> Result<Option<FrobeniusCertificate>> {
        certificate(ideal)
    }
}

impl ClosureOperation for Frobenius {
    fn name(&self) -> String {
        "frob".into()
    }

    fn close(&self, ideal: &Ideal, _budget: &Budget) -> Result<Ideal> {
        match certificate(ideal)? {
            Some(FrobeniusCertificate::Regular) => Ok(ideal.clone()),
            Some(FrobeniusCertificate::FiniteCycle) => {
                let fr = finite_context(ideal.ring()).unwrap();
                Ok(fr.ideal_of(&finite_limit(&fr, &fr.subspace_of(ideal)?, false)))
            }
            None => Err(Error::Undecided(UnknownReason::BudgetExhausted)),
        }
    }

    fn member(&self, f: &Poly, ideal: &Ideal, budget: &Budget) -> Result<Verdict> {
        if certificate(ideal)?.is_some() {
            return Ok(Verdict::from_bool(self.close(ideal, budget)?.contains(f)));
        }
        for e in 0..=budget.e_max {
            if ideal.bracket_power(e)?.contains(&f.frobenius(e)?) {
                return Ok(Verdict::In);
            }
        }
        Ok(Verdict::Unknown(UnknownReason::BudgetExhausted))
    }

    fn flags(&self) -> Flags {
        Flags { claims_semiprime: true, ..Flags::default() }
    }
}

/// The single stage `F_e: I ↦ {f | f^{p^e} ∈ I^{[p^e]}}`.
#[derive(Clone, Copy, Debug)]
pub struct FrobeniusStage {
    pub e: u32,
}

impl ClosureOperation for FrobeniusStage {
    fn name(&self) -> String {
        format!("stage({})", self.e)
    }

    fn close(&self, ideal: &Ideal, _budget: &Budget) -> Result<Ideal> {
        match certificate(ideal)? {
            Some(FrobeniusCertificate::Regular) => Ok(ideal.clone()),
            Some(FrobeniusCertificate::FiniteCycle) => {
                let fr = finite_context(ideal.ring()).unwrap();
                let power = fr.frobenius_power(self.e);
                Ok(fr.ideal_of(&finite_stage(&fr, &fr.subspace_of(ideal)?, &power, false)))
            }
            None => Err(Error::Undecided(UnknownReason::NotImplemented)),
        }
    }

    fn member(&self, f: &Poly, ideal: &Ideal, _budget: &Budget) -> Result<Verdict> {
        Ok(Verdict::from_bool(ideal.bracket_power(self.e)?.contains(&f.frobenius(self.e)?)))
    }

    fn flags(&self) -> Flags {
        Flags { claims_semiprime: true, ..Flags::default() }
    }
}

/// Special part of Frobenius closure on a finite local ring:
/// `{f | f^q ∈ m I^{[q]} for some q}`.
pub fn frobenius_special_part(fr: &Arc<FiniteRing>, ideal: &Ideal) -> Result<Ideal> {
    if fr.maximal_ideal().is_none() {
        return Err(Error::invalid("the special part needs a local ring"));
    }
    Ok(fr.ideal_of(&finite_limit(fr, &fr.subspace_of(ideal)?, true)))
}

/// The Frobenius special part as an operation, for use with the lattice checkers.
#[derive(Clone, Copy, Debug, Default)]
pub struct FrobeniusSpecialPart;

impl ClosureOperation for FrobeniusSpecialPart {
    fn name(&self) -> String {
        "frob-sp".into()
    }

    fn close(&self, ideal: &Ideal, _budget: &Budget) -> Result<Ideal> {
        let fr = finite_context(ideal.ring()).ok_or_else(|| Error::NotFinite(ideal.ring().to_string()))?;
        frobenius_special_part(&fr, ideal)
    }

    fn flags(&self) -> Flags {
        Flags { preclosure: true, ..Flags::default() }
    }
}
