//! Integral closure of monomial ideals via the Newton polyhedron.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::monomial::{self, minimalize, monomial_gens, monomial_ideal};
use crate::closure::{Budget, ClosureOperation, Flags, Verdict};
use crate::error::{Error, Result, UnknownReason};
use crate::groebner::Ideal;
use crate::poly::{Monomial, Poly};

/// `conv(a_1, …, a_k) + R^n_{≥0}` for the exponent vectors of a monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    n: usize,
    gens: Vec<Vec<u32>>,
}

impl NewtonPolyhedron {
    pub fn new(n: usize, gens: &[Monomial]) -> NewtonPolyhedron {
        let gens = minimalize(gens).into_iter().map(|m| m.exponents().to_vec()).collect();
        NewtonPolyhedron { n, gens }
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.gens
    }

    /// Whether `u` lies in the polyhedron: is there `λ ≥ 0` with `Σλ_i = 1` and
    /// `Σλ_i a_i ≤ u`? Decided exactly by checking every basic solution of the
    /// standard-form system `[A I; 1 0] (λ, s) = (u, 1)`.
    pub fn contains(&self, u: &[u32]) -> bool {
        if self.gens.is_empty() {
            return false;
        }
        if self.gens.iter().any(|a| a.iter().zip(u).all(|(x, y)| x <= y)) {
            return true;
        }
        // Σλ_i a_i dominates the componentwise minimum
        if (0..self.n).any(|j| self.gens.iter().map(|a| a[j]).min().unwrap() > u[j]) {
            return false;
        }
        let rows = self.n + 1;
        let k = self.gens.len();
        let column = |c: usize| -> Vec<i64> {
            if c < k {
                let mut v: Vec<i64> = self.gens[c].iter().map(|&x| x as i64).collect();
                v.push(1);
                v
            } else {
                let mut v = vec![0; rows];
                v[c - k] = 1;
                v
            }
        };
        let columns: Vec<Vec<i64>> = (0..k + self.n).map(column).collect();
        let mut rhs: Vec<i64> = u.iter().map(|&x| x as i64).collect();
        rhs.push(1);
        let mut chosen = Vec::with_capacity(rows);
        basic_feasible(&columns, &rhs, 0, &mut chosen)
    }

    /// Minimal lattice points of the polyhedron. A minimal point never exceeds
    /// the largest generator exponent in any coordinate (otherwise lowering that
    /// coordinate by one stays inside), so the search box is finite.
    pub fn integral_closure_generators(&self) -> Vec<Monomial> {
        if self.gens.is_empty() {
            return Vec::new();
        }
        let bounds: Vec<u32> = (0..self.n).map(|j| self.gens.iter().map(|a| a[j]).max().unwrap()).collect();
        let mut found = Vec::new();
        let mut u = vec![0u32; self.n];
        loop {
            if self.contains(&u) {
                found.push(Monomial::new(u.clone()));
            }
            let mut j = 0;
            loop {
                if j == self.n {
                    return minimalize(&found);
                }
                u[j] += 1;
                if u[j] <= bounds[j] {
                    break;
                }
                u[j] = 0;
                j += 1;
            }
        }
    }
}

/// Depth-first over column subsets of size `rows`, solving each square system exactly.
fn basic_feasible(columns: &[Vec<i64>], rhs: &[i64], start: usize, chosen: &mut Vec<usize>) -> bool {
    let rows = rhs.len();
    if chosen.len() == rows {
        return solve_nonnegative(columns, chosen, rhs);
    }
    for c in start..columns.len() {
        if columns.len() - c < rows - chosen.len() {
            break;
        }
        chosen.push(c);
        let ok = basic_feasible(columns, rhs, c + 1, chosen);
        chosen.pop();
        if ok {
            return true;
        }
    }
    false
}

/// Solves `B x = rhs` for the chosen columns; true iff `B` is invertible and `x ≥ 0`.
fn solve_nonnegative(columns: &[Vec<i64>], chosen: &[usize], rhs: &[i64]) -> bool {
    let n = rhs.len();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            let mut row: Vec<BigRational> =
                chosen.iter().map(|&c| BigRational::from_integer(BigInt::from(columns[c][r]))).collect();
            row.push(BigRational::from_integer(BigInt::from(rhs[r])));
            row
        })
        .collect();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return false;
        };
        m.swap(col, p);
        let pivot = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &pivot;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
    }
    m.iter().all(|row| !row[n].is_negative())
}

/// Independent membership oracle: `u ∈ I⁻` iff `n·u` dominates a sum of `n`
/// generators for some `n`. `In` when found with `n ≤ n_max`, else `Unknown`.
pub fn integral_membership_oracle(u: &[u32], gens: &[Monomial], n_max: u32) -> Verdict {
    let arity = u.len();
    let mut sums: BTreeSet<Vec<u32>> = BTreeSet::new();
    sums.insert(vec![0; arity]);
    for n in 1..=n_max {
        let mut next = BTreeSet::new();
        for s in &sums {
            for g in gens {
                next.insert(s.iter().zip(g.exponents()).map(|(a, b)| a + b).collect::<Vec<u32>>());
            }
        }
        sums = next;
        if sums.iter().any(|s| s.iter().zip(u).all(|(a, b)| *a <= n * b)) {
            return Verdict::In;
        }
    }
    Verdict::Unknown(UnknownReason::BudgetExhausted)
}

/// Integral closure of monomial ideals in a free polynomial ring.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntegralClosure;

impl IntegralClosure {
    fn polyhedron(ideal: &Ideal) -> Result<NewtonPolyhedron> {
        if ideal.ring().is_quotient() {
            return Err(Error::Undecided(UnknownReason::NotImplemented));
        }
        Ok(NewtonPolyhedron::new(ideal.ring().arity(), &monomial_gens(ideal)?))
    }
}

impl ClosureOperation for IntegralClosure {
    fn name(&self) -> String {
        "intclosure".into()
    }

    fn close(&self, ideal: &Ideal, _budget: &Budget) -> Result<Ideal> {
        let np = IntegralClosure::polyhedron(ideal)?;
        monomial_ideal(ideal.ring(), &np.integral_closure_generators())
    }

    fn member(&self, f: &Poly, ideal: &Ideal, _budget: &Budget) -> Result<Verdict> {
        // the closure is monomial, so f is in it iff each of its terms is
        let np = match IntegralClosure::polyhedron(ideal) {
            Ok(np) => np,
            Err(Error::Undecided(r)) => return Ok(Verdict::Unknown(r)),
            Err(e) => return Err(e),
        };
        Ok(Verdict::from_bool(f.terms().iter().all(|(m, _)| np.contains(m.exponents()))))
    }

    fn flags(&self) -> Flags {
        Flags { claims_semiprime: true, ..Flags::default() }
    }
}

/// Membership in the special part `{f | f^n ∈ (m I^n)⁻ for some n}` for a
/// monomial `f` and a monomial ideal `I`; `Unknown` past `n_max`.
pub fn integral_special_part_member(u: &Monomial, ideal: &Ideal, n_max: u32) -> Result<Verdict> {
    let gens = monomial_gens(ideal)?;
    let arity = u.arity();
    let vars: Vec<Monomial> = (0..arity).map(|i| Monomial::var(arity, i)).collect();
    for n in 1..=n_max {
        let target = monomial::product(&vars, &monomial::power(&gens, n, arity));
        if NewtonPolyhedron::new(arity, &target).contains(u.pow(n).exponents()) {
            return Ok(Verdict::In);
        }
    }
    Ok(Verdict::Unknown(UnknownReason::BudgetExhausted))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn xy_is_integral_over_squares() {
        let np = NewtonPolyhedron::new(2, &[m(&[2, 0]), m(&[0, 2])]);
        assert!(np.contains(&[1, 1]));
        assert!(!np.contains(&[1, 0]));
        assert_eq!(np.integral_closure_generators(), vec![m(&[0, 2]), m(&[1, 1]), m(&[2, 0])]);
    }

    #[test]
    fn cubes_and_principal() {
        let np = NewtonPolyhedron::new(2, &[m(&[3, 0]), m(&[0, 3])]);
        assert_eq!(np.integral_closure_generators().len(), 4);
        let principal = NewtonPolyhedron::new(2, &[m(&[1, 0])]);
        assert_eq!(principal.integral_closure_generators(), vec![m(&[1, 0])]);
    }

    #[test]
    fn oracle_agrees_on_the_basic_example() {
        let gens = [m(&[2, 0]), m(&[0, 2])];
        assert_eq!(integral_membership_oracle(&[1, 1], &gens, 8), Verdict::In);
        assert_eq!(integral_membership_oracle(&[2, 0], &gens, 1), Verdict::In);
        assert!(!integral_membership_oracle(&[0, 1], &[m(&[1, 0])], 8).is_decided());
    }
}
