use std::sync::Arc;

use super::buchberger::groebner_basis;
use super::ideal::Ideal;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Poly, Ring};

/// A ring homomorphism `R → S` given by the images of the variables of `R`.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: Arc<Ring>,
    target: Arc<Ring>,
    images: Vec<Poly>,
}

impl RingMap {
    /// Checks that there is one image per variable and that every defining
    /// relation of the source is sent to zero.
    pub fn new(source: &Arc<Ring>, target: &Arc<Ring>, images: Vec<Poly>) -> Result<RingMap> {
        if images.len() != source.arity() {
            return Err(Error::InvalidMap(format!("expected {} images, got {}", source.arity(), images.len())));
        }
        if images.iter().any(|g| g.ring() != target) {
            return Err(Error::RingMismatch);
        }
        if source.field() != target.field() {
            return Err(Error::InvalidMap("source and target have different fields".into()));
        }
        let map = RingMap { source: source.clone(), target: target.clone(), images };
        for rel in source.quotient_basis() {
            let image = rel.substitute(target, &map.images);
            if !image.is_zero() {
                return Err(Error::InvalidMap(format!("relation {rel} is sent to {image}, not to zero")));
            }
        }
        Ok(map)
    }

    pub fn identity(ring: &Arc<Ring>) -> RingMap {
        let images = (0..ring.arity()).map(|i| Poly::var(ring, i)).collect();
        RingMap { source: ring.clone(), target: ring.clone(), images }
    }

    /// Sends each variable of `source` to the variable of the same name in `target`.
    pub fn by_names(source: &Arc<Ring>, target: &Arc<Ring>) -> Result<RingMap> {
        let images = source
            .var_names()
            .iter()
            .map(|v| {
                target
                    .var_index(v)
                    .map(|i| Poly::var(target, i))
                    .ok_or_else(|| Error::InvalidMap(format!("variable {v} missing from the target")))
            })
            .collect::<Result<Vec<_>>>()?;
        RingMap::new(source, target, images)
    }

    pub fn source(&self) -> &Arc<Ring> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Ring> {
        &self.target
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    pub fn apply(&self, f: &Poly) -> Poly {
        f.substitute(&self.target, &self.images)
    }

    /// The extended ideal `φ(I)S`.
    pub fn extend(&self, ideal: &Ideal) -> Result<Ideal> {
        if ideal.ring() != &self.source {
            return Err(Error::RingMismatch);
        }
        let gens = ideal.generators().iter().map(|g| self.apply(g)).collect();
        Ideal::with_limits(&self.target, gens, ideal.limits())
    }

    /// The contraction `φ⁻¹(L)`, eliminating the target variables from the graph
    /// ideal `L + (x_i − φ(x_i))` in the joint polynomial ring.
    pub fn preimage(&self, ideal: &Ideal) -> Result<Ideal> {
        if ideal.ring() != &self.target {
            return Err(Error::RingMismatch);
        }
        let m = self.target.arity();
        let n = self.source.arity();
        let mut names: Vec<String> = (0..m).map(|i| format!("_y{i}")).collect();
        names.extend((0..n).map(|i| format!("_x{i}")));
        let joint = Ring::new(self.source.field(), &names, MonomialOrder::Block(m))?;

        let mut gens: Vec<Poly> = ideal.basis().iter().map(|g| embed(g, &joint, 0)).collect();
        for (i, h) in self.images.iter().enumerate() {
            let x = Poly::var(&joint, m + i);
            gens.push(&x - &embed(&h.lift(), &joint, 0));
        }
        gens.extend(self.source.quotient_basis().iter().map(|g| embed(g, &joint, m)));
        let gb = groebner_basis(&gens, ideal.limits())?;
        let src_ambient = self.source.ambient();
        let kept = gb
            .iter()
            .filter(|g| !g.mentions_front(m))
            .map(|g| g.drop_vars(&src_ambient, m).project(&self.source))
            .collect::<Result<Vec<_>>>()?;
        Ideal::with_limits(&self.source, kept, ideal.limits())
    }
}

/// Places the variables of `p` at positions `offset..` of the free ring `ring`.
fn embed(p: &Poly, ring: &Arc<Ring>, offset: usize) -> Poly {
    let total = ring.arity();
    let terms = p
        .terms()
        .iter()
        .map(|(mono, c)| {
            let mut e = vec![0u32; total];
            e[offset..offset + mono.arity()].copy_from_slice(mono.exponents());
            (Monomial::new(e), c.clone())
        })
        .collect();
    Poly::from_terms(ring, terms)
}
