use std::sync::{Arc, Mutex, OnceLock};

use super::linalg::{apply, axpy, compose, is_zero, Subspace, Vector};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{Field, Monomial, Poly, Ring};

/// Default cap on the number of ring elements (`2^8`, or `3^5` over `F_3`).
pub const DEFAULT_MAX_ELEMENTS: u64 = 256;

/// A finite `F_p`-algebra `F_p[x]/J`, materialized on its standard monomial basis.
#[derive(Debug)]
pub struct FiniteRing {
    ring: Arc<Ring>,
    p: u32,
    basis: Vec<Monomial>,
    table: Vec<Vec<Vector>>,
    frobenius: Vec<Vector>,
    maximal: Option<Subspace>,
}

impl FiniteRing {
    pub fn new(ring: &Arc<Ring>) -> Result<FiniteRing> {
        FiniteRing::with_limit(ring, DEFAULT_MAX_ELEMENTS)
    }

    pub fn with_limit(ring: &Arc<Ring>, max_elements: u64) -> Result<FiniteRing> {
        let p = match ring.field() {
            Field::Prime(p) => p,
            Field::Rational => return Err(Error::NotFinite(format!("{ring} is over the rationals"))),
        };
        let basis = ring
            .standard_monomials()
            .ok_or_else(|| Error::NotFinite(format!("{ring} is not a finite-dimensional quotient")))?;
        let size = (p as u64).checked_pow(basis.len() as u32).unwrap_or(u64::MAX);
        if size > max_elements {
            return Err(Error::Resource(format!("{ring} has {size} elements, above the limit of {max_elements}")));
        }
        let n = basis.len();
        let polys: Vec<Poly> = basis.iter().map(|m| Poly::monomial(ring, m.clone())).collect();
        let coords =
            |f: &Poly| -> Vector { basis.iter().map(|m| f.coeff_of(m).residue().expect("prime field")).collect() };
        let table: Vec<Vec<Vector>> =
            (0..n).map(|i| (0..n).map(|j| coords(&(&polys[i] * &polys[j]))).collect()).collect();
        let frobenius = polys.iter().map(|b| coords(&b.pow(p as u64))).collect();
        let mut fr = FiniteRing { ring: ring.clone(), p, basis, table, frobenius, maximal: None };
        let vars: Vec<Vector> = (0..ring.arity()).map(|i| fr.coords(&Poly::var(ring, i))).collect();
        let nilpotent = vars.iter().all(|v| {
            let mut power = v.clone();
            for _ in 0..n {
                power = fr.mul(&power, v);
            }
            is_zero(&power)
        });
        if nilpotent {
            fr.maximal = Some(fr.ideal_span(&vars));
        }
        Ok(fr)
    }

    /// Shared, memoized materialization of `ring`.
    pub fn cached(ring: &Arc<Ring>) -> Result<Arc<FiniteRing>> {
        static CACHE: OnceLock<Mutex<Vec<Arc<FiniteRing>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
        if let Some(hit) = cache.lock().expect("poisoned").iter().find(|f| &f.ring == ring) {
            return Ok(hit.clone());
        }
        let fresh = Arc::new(FiniteRing::new(ring)?);
        let mut guard = cache.lock().expect("poisoned");
        if guard.len() >= 64 {
            guard.remove(0);
        }
        guard.push(fresh.clone());
        Ok(fresh)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn size(&self) -> u64 {
        (self.p as u64).pow(self.dim() as u32)
    }

    /// The unique maximal ideal `(variables)` when every variable is nilpotent.
    pub fn maximal_ideal(&self) -> Option<&Subspace> {
        self.maximal.as_ref()
    }

    pub fn is_local(&self) -> bool {
        self.maximal.is_some()
    }

    pub fn coords(&self, f: &Poly) -> Vector {
        debug_assert!(f.ring() == &self.ring);
        self.basis.iter().map(|m| f.coeff_of(m).residue().expect("prime field")).collect()
    }

    pub fn poly(&self, v: &[u32]) -> Poly {
        let field = self.ring.field();
        let terms = self
            .basis
            .iter()
            .zip(v)
            .filter(|(_, c)| **c != 0)
            .map(|(m, c)| (m.clone(), field.from_i64(*c as i64)))
            .collect();
        Poly::from_terms(&self.ring, terms)
    }

    pub fn one(&self) -> Vector {
        self.coords(&Poly::one(&self.ring))
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vector {
        let mut acc = vec![0; self.dim()];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    let c = ((ai as u64 * bj as u64) % self.p as u64) as u32;
                    axpy(&mut acc, c, &self.table[i][j], self.p);
                }
            }
        }
        acc
    }

    /// Columns of multiplication by `a`.
    pub fn mul_map(&self, a: &[u32]) -> Vec<Vector> {
        (0..self.dim()).map(|j| self.mul(a, &self.unit_vector(j))).collect()
    }

    fn unit_vector(&self, i: usize) -> Vector {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    pub fn is_unit(&self, a: &[u32]) -> bool {
        Subspace::span(self.dim(), self.p, self.mul_map(a)).dim() == self.dim()
    }

    /// Every element, in lexicographic order of coordinates.
    pub fn elements(&self) -> Vec<Vector> {
        let n = self.dim();
        let mut out = Vec::with_capacity(self.size() as usize);
        let mut v = vec![0u32; n];
        loop {
            out.push(v.clone());
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                v[i] += 1;
                if v[i] < self.p {
                    break;
                }
                v[i] = 0;
            }
        }
    }

    /// Columns of `f ↦ f^{p^e}`, which is `F_p`-linear.
    pub fn frobenius_power(&self, e: u32) -> Vec<Vector> {
        let mut m: Vec<Vector> = (0..self.dim()).map(|i| self.unit_vector(i)).collect();
        for _ in 0..e {
            m = compose(&self.frobenius, &m, self.p);
        }
        m
    }

    /// The powers `F^0, F^1, …, F^{e1}` of the Frobenius matrix, stopping at the
    /// first repetition; returns them with the index `e0` of the first repeated power.
    pub fn frobenius_cycle(&self) -> (Vec<Vec<Vector>>, usize) {
        let mut powers = vec![self.frobenius_power(0)];
        loop {
            let next = compose(&self.frobenius, powers.last().unwrap(), self.p);
            if let Some(e0) = powers.iter().position(|m| *m == next) {
                return (powers, e0);
            }
            powers.push(next);
        }
    }

    /// Ideal spanned by the products of `gens` with the basis.
    pub fn ideal_span(&self, gens: &[Vector]) -> Subspace {
        let n = self.dim();
        Subspace::span(n, self.p, gens.iter().flat_map(|g| (0..n).map(move |j| self.mul(g, &self.unit_vector(j)))))
    }

    pub fn subspace_of(&self, ideal: &Ideal) -> Result<Subspace> {
        if ideal.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let gens: Vec<Vector> = ideal.generators().iter().map(|g| self.coords(g)).collect();
        Ok(self.ideal_span(&gens))
    }

    pub fn ideal_of(&self, space: &Subspace) -> Ideal {
        let gens = space.rows().iter().map(|r| self.poly(r)).collect();
        Ideal::new(&self.ring, gens).expect("ideal of a finite ring")
    }

    pub fn ideal_product(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let gens: Vec<Vector> = a.rows().iter().flat_map(|x| b.rows().iter().map(move |y| self.mul(x, y))).collect();
        self.ideal_span(&gens)
    }

    /// `(a : b)`.
    pub fn ideal_colon(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut acc = Subspace::full(self.dim(), self.p);
        for g in b.rows() {
            acc = acc.intersection(&a.preimage(&self.mul_map(g)));
        }
        acc
    }

    /// `{f | f^{p^e} ∈ target}` using precomputed Frobenius columns.
    pub fn frobenius_preimage(&self, columns: &[Vector], target: &Subspace) -> Subspace {
        target.preimage(columns)
    }

    /// The ideal generated by the image of `space` under the given Frobenius columns: `I^{[q]}`.
    pub fn bracket(&self, columns: &[Vector], space: &Subspace) -> Subspace {
        let images: Vec<Vector> = space.rows().iter().map(|r| apply(columns, r, self.p)).collect();
        self.ideal_span(&images)
    }
}
