use std::collections::BTreeSet;

use super::finite_context;
use crate::closure::{Budget, ClosureOperation};
use crate::error::{Error, Result};
use crate::finite::Subspace;
use crate::groebner::Ideal;

/// The v-operation on a finite ring. There every non-zerodivisor is a unit, so
/// the total quotient ring is `R` itself and its cyclic submodules are the
/// principal ideals: `I_v` is the intersection of all principal ideals containing `I`.
#[derive(Clone, Copy, Debug, Default)]
pub struct VOperation;

impl ClosureOperation for VOperation {
    fn name(&self) -> String {
        "vop".into()
    }

    fn close(&self, ideal: &Ideal, _budget: &Budget) -> Result<Ideal> {
        let fr = finite_context(ideal.ring())
            .ok_or_else(|| Error::NotFinite(format!("the v-operation needs a finite ring, got {}", ideal.ring())))?;
        let space = fr.subspace_of(ideal)?;
        let principal: BTreeSet<Subspace> =
            fr.elements().iter().map(|a| fr.ideal_span(std::slice::from_ref(a))).collect();
        let mut acc = Subspace::full(fr.dim(), fr.characteristic());
        for p in principal.iter().filter(|p| space.is_subset(p)) {
            acc = acc.intersection(p);
        }
        Ok(fr.ideal_of(&acc))
    }
}
