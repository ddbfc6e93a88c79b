use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{Coeff, Monomial, MonomialOrder, Ring};
use crate::error::{Error, Result};

pub type Term = (Monomial, Coeff);

/// A polynomial in normal form: terms sorted by decreasing monomial order,
/// no zero coefficients, reduced modulo the ring's defining basis.
#[derive(Clone, Debug)]
pub struct Poly {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
}

/// Checked binary arithmetic; fails when the operands live in different rings.
pub fn poly_arith(a: &Poly, b: &Poly, op: ArithOp) -> Result<Poly> {
    if !a.same_ring(b) {
        return Err(Error::RingMismatch);
    }
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Mul => a * b,
    })
}

impl Poly {
    pub fn zero(ring: &Arc<Ring>) -> Poly {
        Poly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Poly {
        Poly::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Poly {
        Poly::from_terms(ring, vec![(Monomial::one(ring.arity()), c)])
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Poly {
        Poly::from_terms(ring, vec![(Monomial::var(ring.arity(), i), ring.field().one())])
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial) -> Poly {
        Poly::from_terms(ring, vec![(m, ring.field().one())])
    }

    /// Builds a polynomial from arbitrary terms: merges duplicates, drops zeros,
    /// sorts, and reduces modulo the ring's defining basis.
    pub fn from_terms(ring: &Arc<Ring>, terms: Vec<Term>) -> Poly {
        let terms = combine(terms, ring.order());
        let terms = match ring.quotient_basis() {
            [] => terms,
            basis => reduce_terms(terms, basis, ring.order()),
        };
        Poly { ring: ring.clone(), terms }
    }

    /// Wraps terms already in normal form for `ring`.
    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<Term>) -> Poly {
        Poly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn is_term(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn same_ring(&self, other: &Poly) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn constant_coeff(&self) -> Coeff {
        self.terms.iter().find(|(m, _)| m.is_one()).map(|(_, c)| c.clone()).unwrap_or_else(|| self.ring.field().zero())
    }

    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        self.terms.iter().find(|(t, _)| t == m).map(|(_, c)| c.clone()).unwrap_or_else(|| self.ring.field().zero())
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    /// Multiplies by `c * m`; exact in the ambient ring, reduced in quotients.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Poly {
        let terms: Vec<Term> = self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect();
        if self.ring.is_quotient() {
            Poly::from_terms(&self.ring, terms)
        } else {
            Poly { ring: self.ring.clone(), terms }
        }
    }

    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.inverse().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    /// `self^n` by repeated squaring (reduced after every product in quotients).
    pub fn pow(&self, mut n: u64) -> Poly {
        let mut acc = Poly::one(&self.ring);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^(p^e)` computed term-wise: coefficients to the `p^e`, exponents scaled.
    pub fn frobenius(&self, e: u32) -> Result<Poly> {
        let p = self.ring.characteristic();
        if p == 0 {
            return Err(Error::CharacteristicZero("Frobenius power"));
        }
        let q = (p as u64).checked_pow(e).ok_or_else(|| Error::Resource("p^e overflows".into()))?;
        let q32 = u32::try_from(q).map_err(|_| Error::Resource("p^e overflows".into()))?;
        let terms = self.terms.iter().map(|(m, c)| (m.pow(q32), c.pow(q))).collect();
        Ok(Poly::from_terms(&self.ring, terms))
    }

    /// The same terms viewed in the ambient polynomial ring.
    pub fn lift(&self) -> Poly {
        Poly { ring: self.ring.ambient(), terms: self.terms.clone() }
    }

    /// Reinterprets (and reduces) this polynomial in another ring with the same
    /// variables, field and order — typically between a quotient and its ambient.
    pub fn project(&self, ring: &Arc<Ring>) -> Result<Poly> {
        if ring.field() != self.ring.field() || ring.var_names() != self.ring.var_names() {
            return Err(Error::RingMismatch);
        }
        Ok(Poly::from_terms(ring, self.terms.clone()))
    }

    /// Substitutes `images[i]` for variable `i`; images share a target ring.
    pub fn substitute(&self, target: &Arc<Ring>, images: &[Poly]) -> Poly {
        let mut acc = Poly::zero(target);
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|g| vec![Poly::one(target), g.clone()]).collect();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Exact division by `g` in the ambient polynomial ring; `None` if `g` does not divide.
    pub fn divide_exact(&self, g: &Poly) -> Option<Poly> {
        let order = self.ring.order();
        let (lm, lc) = g.terms.first()?;
        let lc_inv = lc.inverse()?;
        let mut rem = self.terms.clone();
        let mut quot: Vec<Term> = Vec::new();
        while let Some((m, c)) = rem.first().cloned() {
            let qm = m.div(lm)?;
            let qc = &c * &lc_inv;
            let shifted: Vec<Term> = g.terms.iter().map(|(t, a)| (t.mul(&qm), -&(a * &qc))).collect();
            rem = merge_add(&rem, &shifted, order);
            quot.push((qm, qc));
        }
        Some(Poly { ring: self.ring.clone(), terms: quot })
    }

    pub(crate) fn extend_vars(&self, ring: &Arc<Ring>, extra_front: usize) -> Poly {
        let terms = self.terms.iter().map(|(m, c)| (m.extend_front(extra_front), c.clone())).collect();
        Poly::from_terms(ring, terms)
    }

    pub(crate) fn drop_vars(&self, ring: &Arc<Ring>, front: usize) -> Poly {
        let terms = self.terms.iter().map(|(m, c)| (m.drop_front(front), c.clone())).collect();
        Poly::from_terms(ring, terms)
    }

    pub(crate) fn mentions_front(&self, front: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponents()[..front].iter().any(|&e| e > 0))
    }
}

/// Merges two sorted term lists (adding coefficients), keeping decreasing order.
pub(crate) fn merge_add(a: &[Term], b: &[Term], order: MonomialOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].1 + &b[j].1;
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn combine(terms: Vec<Term>, order: MonomialOrder) -> Vec<Term> {
    let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(terms.len());
    for (m, c) in terms {
        match acc.get_mut(&m) {
            Some(a) => *a = &*a + &c,
            None => {
                acc.insert(m, c);
            }
        }
    }
    let mut out: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort_by(|a, b| order.cmp(&b.0, &a.0));
    out
}

/// Full reduction of `terms` modulo `basis` (all sharing one term order).
pub(crate) fn reduce_terms(terms: Vec<Term>, basis: &[Poly], order: MonomialOrder) -> Vec<Term> {
    let mut rem = terms;
    let mut out: Vec<Term> = Vec::new();
    while let Some((m, c)) = rem.first().cloned() {
        let divisor = basis.iter().find(|g| g.leading_monomial().map(|l| l.divides(&m)).unwrap_or(false));
        match divisor {
            Some(g) => {
                let (lm, lc) = &g.terms[0];
                let qm = m.div(lm).expect("divisibility checked");
                let qc = -&(&c * &lc.inverse().expect("nonzero"));
                let shifted: Vec<Term> = g.terms.iter().map(|(t, a)| (t.mul(&qm), a * &qc)).collect();
                rem = merge_add(&rem, &shifted, order);
            }
            None => {
                out.push((m, c));
                rem.remove(0);
            }
        }
    }
    out
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert!(self.same_ring(rhs), "ring mismatch in addition");
        Poly { ring: self.ring.clone(), terms: merge_add(&self.terms, &rhs.terms, self.ring.order()) }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert!(self.same_ring(rhs), "ring mismatch in multiplication");
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                terms.push((m.mul(n), a * b));
            }
        }
        Poly::from_terms(&self.ring, terms)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.var_names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                m.write_with(vars, f)?;
            }
        }
        Ok(())
    }
}
