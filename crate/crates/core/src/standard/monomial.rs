//! Monomial ideals as minimal generating sets of exponent vectors.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{Monomial, Poly, Ring};

/// Drops generators divisible by others; sorted and duplicate-free.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out.sort();
    out
}

pub fn contains(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(m))
}

pub fn is_subset(a: &[Monomial], b: &[Monomial]) -> bool {
    a.iter().all(|m| contains(b, m))
}

pub fn sum(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut all = a.to_vec();
    all.extend(b.iter().cloned());
    minimalize(&all)
}

pub fn product(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    minimalize(&a.iter().flat_map(|x| b.iter().map(move |y| x.mul(y))).collect::<Vec<_>>())
}

pub fn power(a: &[Monomial], n: u32, arity: usize) -> Vec<Monomial> {
    let mut acc = vec![Monomial::one(arity)];
    for _ in 0..n {
        acc = product(&acc, a);
    }
    acc
}

pub fn intersection(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    minimalize(&a.iter().flat_map(|x| b.iter().map(move |y| x.lcm(y))).collect::<Vec<_>>())
}

/// `(a : m) = (g / gcd(g, m))`.
pub fn colon_monomial(a: &[Monomial], m: &Monomial) -> Vec<Monomial> {
    minimalize(&a.iter().map(|g| g.div(&g.gcd(m)).unwrap()).collect::<Vec<_>>())
}

/// `(a : b)`; the colon by the zero ideal is the unit ideal.
pub fn colon(a: &[Monomial], b: &[Monomial], arity: usize) -> Vec<Monomial> {
    let mut acc = vec![Monomial::one(arity)];
    for m in b {
        acc = intersection(&acc, &colon_monomial(a, m));
    }
    acc
}

/// A primary component: the variables generating its radical and its generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub prime: Vec<usize>,
    pub gens: Vec<Monomial>,
}

impl PrimaryComponent {
    pub fn codim(&self) -> usize {
        self.prime.len()
    }
}

/// Decomposition into irreducible (pure-power generated) ideals, by splitting a
/// mixed generator `x_i^a·m'` into `(I + x_i^a) ∩ (I + m')`.
pub fn irreducible_decomposition(gens: &[Monomial]) -> Vec<Vec<Monomial>> {
    let gens = minimalize(gens);
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    let Some(mixed) = gens.iter().find(|g| g.support().len() > 1) else {
        return vec![gens];
    };
    let i = mixed.support()[0];
    let a = mixed.exponents()[i];
    let pure = Monomial::var(mixed.arity(), i).pow(a);
    let rest = mixed.div(&pure).unwrap();
    let mut out = Vec::new();
    for extra in [pure, rest] {
        let mut g = gens.clone();
        g.push(extra);
        for comp in irreducible_decomposition(&g) {
            if !out.contains(&comp) {
                out.push(comp);
            }
        }
    }
    // an irreducible component containing another one is redundant
    let keep: Vec<bool> = (0..out.len())
        .map(|k| !(0..out.len()).any(|l| l != k && is_subset(&out[l], &out[k]) && (out[l] != out[k] || l < k)))
        .collect();
    out.into_iter().zip(keep).filter(|(_, k)| *k).map(|(c, _)| c).collect()
}

/// Irredundant primary decomposition: irreducible components grouped by radical.
pub fn primary_decomposition(gens: &[Monomial]) -> Vec<PrimaryComponent> {
    let mut groups: BTreeMap<Vec<usize>, Vec<Monomial>> = BTreeMap::new();
    for comp in irreducible_decomposition(gens) {
        let mut prime: Vec<usize> = comp.iter().flat_map(|g| g.support()).collect();
        prime.sort();
        prime.dedup();
        groups.entry(prime).and_modify(|acc| *acc = intersection(acc, &comp)).or_insert(comp);
    }
    groups.into_iter().map(|(prime, gens)| PrimaryComponent { prime, gens }).collect()
}

/// Intersection of the components of minimal codimension ("maximal dimension").
pub fn unmixed_part(gens: &[Monomial], arity: usize) -> Vec<Monomial> {
    let comps = primary_decomposition(gens);
    let Some(min) = comps.iter().map(|c| c.codim()).min() else {
        return vec![Monomial::one(arity)];
    };
    let mut acc = vec![Monomial::one(arity)];
    for c in comps.iter().filter(|c| c.codim() == min) {
        acc = intersection(&acc, &c.gens);
    }
    acc
}

/// Minimal monomial generators of a monomial ideal of a free polynomial ring.
pub fn monomial_gens(ideal: &Ideal) -> Result<Vec<Monomial>> {
    if ideal.ring().is_quotient() {
        return Err(Error::invalid("monomial routines need a free polynomial ring"));
    }
    ideal.monomial_generators().ok_or_else(|| Error::NotMonomial(ideal.to_string()))
}

pub fn monomial_ideal(ring: &Arc<Ring>, gens: &[Monomial]) -> Result<Ideal> {
    Ideal::new(ring, gens.iter().map(|m| Poly::monomial(ring, m.clone())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn decomposes_textbook_examples() {
        // (x^2, xy) = (x) ∩ (x^2, y)
        let d = primary_decomposition(&[m(&[2, 0]), m(&[1, 1])]);
        assert_eq!(d.len(), 2);
        assert_eq!(d[0], PrimaryComponent { prime: vec![0], gens: vec![m(&[1, 0])] });
        assert_eq!(d[1], PrimaryComponent { prime: vec![0, 1], gens: vec![m(&[0, 1]), m(&[2, 0])] });
        // (xy, xz) = (x) ∩ (y, z)
        let d = primary_decomposition(&[m(&[1, 1, 0]), m(&[1, 0, 1])]);
        assert_eq!(d.iter().map(|c| c.prime.clone()).collect::<Vec<_>>(), vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn unmixed_parts() {
        assert_eq!(unmixed_part(&[m(&[2, 0]), m(&[1, 1])], 2), vec![m(&[1, 0])]);
        assert_eq!(unmixed_part(&[m(&[0, 1, 0]), m(&[0, 0, 1])], 3), vec![m(&[0, 0, 1]), m(&[0, 1, 0])]);
        let i = [m(&[2, 0]), m(&[1, 1]), m(&[0, 2])];
        assert_eq!(unmixed_part(&i, 2), minimalize(&i));
    }

    #[test]
    fn colon_of_monomial_ideals() {
        let a = [m(&[2, 1]), m(&[1, 2])];
        assert_eq!(colon(&a, &[m(&[1, 0])], 2), vec![m(&[0, 2]), m(&[1, 1])]);
        assert_eq!(colon(&a, &[], 2), vec![m(&[0, 0])]);
    }
}
