use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::buchberger::{groebner_basis, normal_form, GbLimits};
use crate::error::{Error, Result};
use crate::poly::{parse_poly, Monomial, MonomialOrder, Poly, Ring};

/// An ideal of a (quotient) polynomial ring together with its reduced Gröbner
/// basis. The basis lives in the ambient polynomial ring and includes the
/// defining relations of the quotient, so two ideals of the same ring are equal
/// exactly when their bases are identical.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Poly>,
    basis: Arc<Vec<Poly>>,
    limits: GbLimits,
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, gens: Vec<Poly>) -> Result<Ideal> {
        Ideal::with_limits(ring, gens, GbLimits::default())
    }

    pub fn with_limits(ring: &Arc<Ring>, gens: Vec<Poly>, limits: GbLimits) -> Result<Ideal> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        let mut lifted: Vec<Poly> = kept.iter().map(Poly::lift).collect();
        lifted.extend(ring.quotient_basis().iter().cloned());
        let basis = groebner_basis(&lifted, limits)?;
        Ok(Ideal { ring: ring.clone(), gens: kept, basis: Arc::new(basis), limits })
    }

    /// Parses each string with the polynomial syntax of `ring`.
    pub fn parse(ring: &Arc<Ring>, gens: &[&str]) -> Result<Ideal> {
        let polys = gens.iter().map(|s| parse_poly(ring, s)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, Vec::new()).expect("zero ideal")
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, vec![Poly::one(ring)]).expect("unit ideal")
    }

    /// The ideal generated by the variables (the irrelevant / maximal ideal).
    pub fn variables(ring: &Arc<Ring>) -> Ideal {
        let gens = (0..ring.arity()).map(|i| Poly::var(ring, i)).collect();
        Ideal::new(ring, gens).expect("variable ideal")
    }

    fn derived(&self, gens: Vec<Poly>) -> Result<Ideal> {
        Ideal::with_limits(&self.ring, gens, self.limits)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn limits(&self) -> GbLimits {
        self.limits
    }

    /// The same ideal, with `limits` governing every ideal derived from it.
    pub fn with_gb_limits(&self, limits: GbLimits) -> Ideal {
        Ideal { limits, ..self.clone() }
    }

    /// Generators as supplied (normal forms, zeros dropped).
    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    /// Reduced Gröbner basis in the ambient ring, defining relations included.
    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    /// Canonical generators in the ring: the reduced basis minus the elements
    /// that vanish in the quotient.
    pub fn canonical_generators(&self) -> Vec<Poly> {
        self.basis.iter().map(|g| Poly::from_terms(&self.ring, g.terms().to_vec())).filter(|g| !g.is_zero()).collect()
    }

    /// Normal form of `f` modulo the ideal, as an element of the ring.
    pub fn reduce(&self, f: &Poly) -> Poly {
        let nf = normal_form(&f.lift(), &self.basis);
        Poly::from_sorted(&self.ring, nf.into_terms())
    }

    pub fn contains(&self, f: &Poly) -> bool {
        debug_assert!(f.ring() == &self.ring, "membership across rings");
        normal_form(&f.lift(), &self.basis).is_zero()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn is_zero(&self) -> bool {
        self.canonical_generators().is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    /// Whether the ideal (together with the defining relations) is generated by monomials.
    pub fn is_monomial(&self) -> bool {
        self.basis.iter().all(|g| g.is_monomial())
    }

    /// Minimal monomial generators of `I + J` in the ambient ring, if monomial.
    pub fn monomial_generators(&self) -> Option<Vec<Monomial>> {
        if !self.is_monomial() {
            return None;
        }
        Some(self.basis.iter().map(|g| g.leading_monomial().unwrap().clone()).collect())
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        self.derived(gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        self.derived(gens)
    }

    pub fn power(&self, n: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `f · I`.
    pub fn scale(&self, f: &Poly) -> Result<Ideal> {
        self.derived(self.gens.iter().map(|g| g * f).collect())
    }

    /// `I ∩ K`, by eliminating `t` from `t·I + (1 − t)·K` in the ambient ring.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let gens = intersect_in_ambient(&self.ring.ambient(), &self.basis, &other.basis, self.limits)?;
        self.project_ambient(gens)
    }

    fn project_ambient(&self, ambient_gens: Vec<Poly>) -> Result<Ideal> {
        let gens = ambient_gens.iter().map(|g| g.project(&self.ring)).collect::<Result<Vec<_>>>()?;
        self.derived(gens)
    }

    /// `(I : f) = {g | g f ∈ I}`.
    pub fn colon_poly(&self, f: &Poly) -> Result<Ideal> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if self.contains(f) {
            return Ok(Ideal::unit(&self.ring));
        }
        let ambient = self.ring.ambient();
        let g = f.lift();
        let meet = intersect_in_ambient(&ambient, &self.basis, std::slice::from_ref(&g), self.limits)?;
        let quotients = meet
            .iter()
            .map(|h| h.divide_exact(&g).ok_or_else(|| Error::invalid("inexact division in colon")))
            .collect::<Result<Vec<_>>>()?;
        self.project_ambient(quotients)
    }

    /// `(I : K) = ∩_g (I : g)` over the generators `g` of `K`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut acc = Ideal::unit(&self.ring);
        for g in other.canonical_generators() {
            acc = acc.intersection(&self.colon_poly(&g)?)?;
            if acc == *self {
                break;
            }
        }
        Ok(acc)
    }

    /// `(I : A^∞)`, iterating `I ↦ (I : A)` until the chain stops growing.
    pub fn saturation(&self, other: &Ideal) -> Result<Ideal> {
        let mut current = self.clone();
        loop {
            let next = current.colon(other)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// `I^{[p^e]}`, generated by the `p^e`-th powers of the listed generators.
    pub fn bracket_power(&self, e: u32) -> Result<Ideal> {
        if self.ring.characteristic() == 0 {
            return Err(Error::CharacteristicZero("bracket power"));
        }
        let gens = self.gens.iter().map(|g| g.frobenius(e)).collect::<Result<Vec<_>>>()?;
        self.derived(gens)
    }

    /// `f ∈ √I`, decided by testing `1 ∈ I + (1 − t f)` with a new variable `t`.
    pub fn radical_contains(&self, f: &Poly) -> Result<bool> {
        if self.contains(f) {
            return Ok(true);
        }
        let ambient = self.ring.ambient();
        let ext = extended_ring(&ambient, 1)?;
        let mut gens: Vec<Poly> = self.basis.iter().map(|g| g.extend_vars(&ext, 1)).collect();
        let tf = &Poly::var(&ext, 0) * &f.lift().extend_vars(&ext, 1);
        gens.push(&Poly::one(&ext) - &tf);
        let gb = groebner_basis(&gens, self.limits)?;
        Ok(gb.len() == 1 && gb[0].is_constant())
    }
}

/// Free ring with `extra` fresh variables in front of the ambient ones, under a
/// block order eliminating the fresh block.
pub(crate) fn extended_ring(ambient: &Arc<Ring>, extra: usize) -> Result<Arc<Ring>> {
    let mut names: Vec<String> = (0..extra).map(|i| format!("_t{i}")).collect();
    names.extend(ambient.var_names().iter().map(|v| format!("_v{v}")));
    Ring::new(ambient.field(), &names, MonomialOrder::Block(extra))
}

pub(crate) fn intersect_in_ambient(ambient: &Arc<Ring>, a: &[Poly], b: &[Poly], limits: GbLimits) -> Result<Vec<Poly>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let ext = extended_ring(ambient, 1)?;
    let t = Poly::var(&ext, 0);
    let one_minus_t = &Poly::one(&ext) - &t;
    let mut gens: Vec<Poly> = a.iter().map(|g| &t * &g.extend_vars(&ext, 1)).collect();
    gens.extend(b.iter().map(|g| &one_minus_t * &g.extend_vars(&ext, 1)));
    let gb = groebner_basis(&gens, limits)?;
    Ok(gb.iter().filter(|g| !g.mentions_front(1)).map(|g| g.drop_vars(ambient, 1)).collect())
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.basis == other.basis
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.basis.hash(state);
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.canonical_generators();
        if gens.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}
