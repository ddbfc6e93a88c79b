//! Brute-force oracles that share no code with the engine's closure
//! algorithms. Finite rings are handled as explicit sets of elements;
//! monomial questions are answered by exponent arithmetic.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use idealclose::finite::{FiniteRing, IdealLattice};
use idealclose::groebner::Ideal;
use idealclose::poly::{Field, Poly, Ring};

pub type Elem = Vec<u32>;
pub type ElemSet = BTreeSet<Elem>;

pub fn ring(p: u32, vars: &[&str], rels: &[&str]) -> Arc<Ring> {
    let base = Ring::polynomial(Field::prime(p).unwrap(), vars).unwrap();
    Ring::quotient_str(&base, rels).unwrap()
}

pub fn lattice(p: u32, vars: &[&str], rels: &[&str]) -> IdealLattice {
    IdealLattice::new(FiniteRing::cached(&ring(p, vars, rels)).unwrap()).unwrap()
}

/// `F_2[x,y]/(x^2, xy, y^2)`, `F_2[x]/(x^3)`, `F_2[x,y]/(x^2, y^2)`.
pub fn small_lattices() -> Vec<(&'static str, IdealLattice)> {
    vec![
        ("F2[x,y]/(x^2,xy,y^2)", lattice(2, &["x", "y"], &["x^2", "x*y", "y^2"])),
        ("F2[x]/(x^3)", lattice(2, &["x"], &["x^3"])),
        ("F2[x,y]/(x^2,y^2)", lattice(2, &["x", "y"], &["x^2", "y^2"])),
    ]
}

pub fn add(fr: &FiniteRing, a: &[u32], b: &[u32]) -> Elem {
    let p = fr.characteristic();
    a.iter().zip(b).map(|(x, y)| (x + y) % p).collect()
}

pub fn power(fr: &FiniteRing, a: &[u32], n: u32) -> Elem {
    let mut acc = fr.one();
    for _ in 0..n {
        acc = fr.mul(&acc, a);
    }
    acc
}

/// Members of `ideal`, decided one element at a time by normal forms.
pub fn elements_of(fr: &FiniteRing, ideal: &Ideal) -> ElemSet {
    fr.elements().into_iter().filter(|e| ideal.contains(&fr.poly(e))).collect()
}

/// The ideal generated by `gens`: all multiples, closed under addition.
pub fn generated<'a>(fr: &FiniteRing, gens: impl IntoIterator<Item = &'a Elem>) -> ElemSet {
    let all = fr.elements();
    let zero = vec![0; fr.dim()];
    let multiples: ElemSet = gens.into_iter().flat_map(|g| all.iter().map(move |r| fr.mul(r, g))).collect();
    let mut set: ElemSet = BTreeSet::from([zero]);
    let mut frontier: Vec<Elem> = set.iter().cloned().collect();
    while let Some(s) = frontier.pop() {
        for m in &multiples {
            let t = add(fr, &s, m);
            if set.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    set
}

pub fn principal(fr: &FiniteRing, a: &Elem) -> ElemSet {
    generated(fr, [a])
}

pub fn product(fr: &FiniteRing, a: &ElemSet, b: &ElemSet) -> ElemSet {
    let products: Vec<Elem> = a.iter().flat_map(|x| b.iter().map(move |y| fr.mul(x, y))).collect();
    generated(fr, &products)
}

/// `(a : b)`.
pub fn colon(fr: &FiniteRing, a: &ElemSet, b: &ElemSet) -> ElemSet {
    fr.elements().into_iter().filter(|r| b.iter().all(|y| a.contains(&fr.mul(r, y)))).collect()
}

pub fn whole(fr: &FiniteRing) -> ElemSet {
    fr.elements().into_iter().collect()
}

/// Every ideal of `fr`, as sums of principal ideals.
pub fn all_ideals(fr: &FiniteRing) -> Vec<ElemSet> {
    let principals: BTreeSet<ElemSet> = fr.elements().iter().map(|a| principal(fr, a)).collect();
    let mut found: BTreeSet<ElemSet> = principals.clone();
    let mut frontier: Vec<ElemSet> = found.iter().cloned().collect();
    while let Some(i) = frontier.pop() {
        for q in &principals {
            let gens: Vec<Elem> = i.iter().chain(q).cloned().collect();
            let s = generated(fr, &gens);
            if found.insert(s.clone()) {
                frontier.push(s);
            }
        }
    }
    found.into_iter().collect()
}

/// The unique maximal ideal of a local ring: the non-units.
pub fn maximal(fr: &FiniteRing) -> ElemSet {
    let one = fr.one();
    let all = fr.elements();
    all.iter().filter(|a| !all.iter().any(|b| fr.mul(a, b) == one)).cloned().collect()
}

/// `I_v`: the intersection of the principal ideals that contain `I`.
pub fn v_closure(fr: &FiniteRing, ideal: &ElemSet) -> ElemSet {
    let mut acc = whole(fr);
    for a in fr.elements() {
        let pa = principal(fr, &a);
        if ideal.is_subset(&pa) {
            acc = acc.intersection(&pa).cloned().collect();
        }
    }
    acc
}

/// `I^F = {f | f^q ∈ I^[q] for some q = p^e, e ≤ e_max}`, with `I^[q]`
/// generated by the `q`-th powers of all elements of `I`.
pub fn frobenius_closure(fr: &FiniteRing, ideal: &ElemSet, e_max: u32) -> ElemSet {
    let p = fr.characteristic();
    let mut out = BTreeSet::new();
    for e in 0..=e_max {
        let q = p.pow(e);
        let powers: Vec<Elem> = ideal.iter().map(|f| power(fr, f, q)).collect();
        let bracket = generated(fr, &powers);
        out.extend(fr.elements().into_iter().filter(|f| bracket.contains(&power(fr, f, q))));
    }
    out
}

/// `{f | f^q ∈ m I^[q] for some q}`.
pub fn frobenius_special(fr: &FiniteRing, ideal: &ElemSet, e_max: u32) -> ElemSet {
    let p = fr.characteristic();
    let m = maximal(fr);
    let mut out = BTreeSet::new();
    for e in 0..=e_max {
        let q = p.pow(e);
        let powers: Vec<Elem> = ideal.iter().map(|f| power(fr, f, q)).collect();
        let target = product(fr, &m, &generated(fr, &powers));
        out.extend(fr.elements().into_iter().filter(|f| target.contains(&power(fr, f, q))));
    }
    out
}

/// `{f | f^n ∈ I for some n ≤ |R|}`.
pub fn radical(fr: &FiniteRing, ideal: &ElemSet) -> ElemSet {
    let bound = fr.size() as u32;
    fr.elements().into_iter().filter(|f| (1..=bound).any(|n| ideal.contains(&power(fr, f, n)))).collect()
}

pub fn nilradical(fr: &FiniteRing) -> ElemSet {
    let zero: ElemSet = BTreeSet::from([vec![0; fr.dim()]]);
    radical(fr, &zero)
}

/// The minimal number of generators, `log_p |I / mI|`.
pub fn mu(fr: &FiniteRing, ideal: &ElemSet) -> usize {
    let m_i = product(fr, &maximal(fr), ideal);
    let mut ratio = ideal.len() / m_i.len();
    let mut n = 0;
    while ratio > 1 {
        ratio /= fr.characteristic() as usize;
        n += 1;
    }
    n
}

fn dominates(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

/// `u ∈ I⁻` by search: `n·u` dominates a sum of `n` generator exponents for some `n ≤ n_max`.
pub fn integral_power_search(u: &[u32], gens: &[Vec<u32>], n_max: u32) -> bool {
    let mut sums: BTreeSet<Vec<u32>> = BTreeSet::from([vec![0; u.len()]]);
    for n in 1..=n_max {
        let next: BTreeSet<Vec<u32>> =
            sums.iter().flat_map(|s| gens.iter().map(move |g| s.iter().zip(g).map(|(a, b)| a + b).collect())).collect();
        // only the minimal sums matter
        sums = next.iter().filter(|s| !next.iter().any(|t| t != *s && dominates(s, t))).cloned().collect();
        let nu: Vec<u32> = u.iter().map(|x| x * n).collect();
        if sums.iter().any(|s| dominates(&nu, s)) {
            return true;
        }
    }
    false
}

/// `f ∈ √I` by search: `f^n ∈ I` for some `n ≤ n_max`.
pub fn radical_power_search(f: &Poly, ideal: &Ideal, n_max: u64) -> bool {
    let mut acc = f.clone();
    for _ in 1..=n_max {
        if ideal.contains(&acc) {
            return true;
        }
        acc = &acc * f;
    }
    false
}

/// Whether the monomial `u` is divisible by one of `gens`.
pub fn divisible(u: &[u32], gens: &[Vec<u32>]) -> bool {
    gens.iter().any(|g| dominates(u, g))
}

pub fn exp_sum(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}
