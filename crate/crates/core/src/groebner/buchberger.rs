use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::poly::{reduce_terms, Monomial, Poly, Term};

/// Guardrail for Gröbner computations: the run aborts once the basis holds more
/// than `max_terms` terms in total or more than `max_terms` reductions were made.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbLimits {
    pub max_terms: usize,
}

impl Default for GbLimits {
    fn default() -> Self {
        GbLimits { max_terms: 200_000 }
    }
}

/// Normal form of `f` modulo `basis` (all in one free ring).
pub fn normal_form(f: &Poly, basis: &[Poly]) -> Poly {
    if basis.is_empty() || f.is_zero() {
        return f.clone();
    }
    let terms = reduce_terms(f.terms().to_vec(), basis, f.ring().order());
    Poly::from_sorted(f.ring(), terms)
}

fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    let (fm, fc) = f.terms().first().expect("nonzero");
    let (gm, gc) = g.terms().first().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.div(fm).unwrap(), &gc.clone());
    let b = g.mul_term(&l.div(gm).unwrap(), &fc.clone());
    &a - &b
}

/// Reduced Gröbner basis of the ideal generated by `gens` in their (free) ring,
/// by Buchberger's algorithm with the coprime and chain criteria. The result is
/// monic and sorted by decreasing leading monomial; `[]` for the zero ideal.
pub fn groebner_basis(gens: &[Poly], limits: GbLimits) -> Result<Vec<Poly>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    debug_assert!(!ring.is_quotient());
    let mut basis: Vec<Poly> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    // pairs whose S-polynomial was reduced or whose leading monomials are coprime
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    let mut steps = 0usize;

    let insert = |h: Poly, basis: &mut Vec<Poly>, active: &mut Vec<bool>, pending: &mut HashSet<(usize, usize)>| {
        let k = basis.len();
        let hm = h.leading_monomial().unwrap().clone();
        for i in 0..k {
            if active[i] {
                pending.insert((i, k));
                // drop older elements whose leading monomial is now redundant
                if hm.divides(basis[i].leading_monomial().unwrap()) {
                    active[i] = false;
                }
            }
        }
        basis.push(h);
        active.push(true);
    };

    for g in gens {
        let h = normal_form(g, &live(&basis, &active));
        if !h.is_zero() {
            insert(h.monic(), &mut basis, &mut active, &mut pending);
        }
    }

    while !pending.is_empty() {
        // normal selection strategy: smallest lcm first, ties broken by indices
        let order = ring.order();
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = pair_lcm(&basis, **a);
                let lb = pair_lcm(&basis, **b);
                order.cmp(&la, &lb).then(a.cmp(b))
            })
            .unwrap();
        pending.remove(&(i, j));

        let li = basis[i].leading_monomial().unwrap();
        let lj = basis[j].leading_monomial().unwrap();
        if li.is_coprime(lj) {
            done.insert((i, j));
            continue;
        }
        let l = li.lcm(lj);
        // only pairs that were actually treated may justify skipping this one
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&l)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        steps += 1;
        done.insert((i, j));
        let s = s_polynomial(&basis[i], &basis[j]);
        let h = normal_form(&s, &live(&basis, &active));
        if !h.is_zero() {
            if h.is_constant() {
                return Ok(vec![Poly::one(&ring)]);
            }
            insert(h.monic(), &mut basis, &mut active, &mut pending);
        }
        let size: usize = basis.iter().map(|g| g.terms().len()).sum();
        if size > limits.max_terms || steps > limits.max_terms {
            return Err(Error::Resource(format!(
                "Gröbner basis computation exceeded the monomial budget of {}",
                limits.max_terms
            )));
        }
    }

    Ok(interreduce(live(&basis, &active)))
}

fn pair_lcm(basis: &[Poly], (i, j): (usize, usize)) -> Monomial {
    basis[i].leading_monomial().unwrap().lcm(basis[j].leading_monomial().unwrap())
}

fn live(basis: &[Poly], active: &[bool]) -> Vec<Poly> {
    basis.iter().zip(active).filter(|(_, a)| **a).map(|(g, _)| g.clone()).collect()
}

/// Minimalizes and tail-reduces a Gröbner basis into the reduced one.
fn interreduce(mut g: Vec<Poly>) -> Vec<Poly> {
    if g.iter().any(|p| p.is_constant()) {
        let ring = g[0].ring().clone();
        return vec![Poly::one(&ring)];
    }
    let order = match g.first() {
        Some(p) => p.ring().order(),
        None => return g,
    };
    g.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Poly> = Vec::new();
    for p in g {
        let lm = p.leading_monomial().unwrap();
        if !minimal.iter().any(|q| q.leading_monomial().unwrap().divides(lm)) {
            minimal.push(p);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Poly> = minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p.clone()).collect();
        let p = &minimal[k];
        let (head, tail) = p.terms().split_first().unwrap();
        let tail_poly = Poly::from_sorted(p.ring(), tail.to_vec());
        let tail_nf = normal_form(&tail_poly, &others);
        let mut terms: Vec<Term> = vec![head.clone()];
        terms.extend(tail_nf.into_terms());
        reduced.push(Poly::from_sorted(p.ring(), terms).monic());
    }
    reduced.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    reduced
}
