use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::{Field, Monomial, MonomialOrder, Poly};
use crate::error::{Error, Result};

/// A polynomial ring over a field, optionally modulo an ideal given by its
/// reduced Gröbner basis in the ambient polynomial ring.
#[derive(Debug, PartialEq, Eq)]
pub struct Ring {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
    quotient: Option<Quotient>,
}

#[derive(Debug, PartialEq, Eq)]
pub(crate) struct Quotient {
    pub(crate) ambient: Arc<Ring>,
    pub(crate) basis: Vec<Poly>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(field: Field, vars: &[S], order: MonomialOrder) -> Result<Arc<Ring>> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        let mut seen = HashSet::new();
        for v in &vars {
            if !seen.insert(v) {
                return Err(Error::invalid(format!("duplicate variable name {v}")));
            }
        }
        if let MonomialOrder::Block(k) = order {
            if k > vars.len() {
                return Err(Error::invalid("block size exceeds the number of variables"));
            }
        }
        Ok(Arc::new(Ring { field, vars, order, quotient: None }))
    }

    /// Polynomial ring with the default grevlex order.
    pub fn polynomial<S: AsRef<str>>(field: Field, vars: &[S]) -> Result<Arc<Ring>> {
        Ring::new(field, vars, MonomialOrder::GrevLex)
    }

    /// Wraps a reduced Gröbner basis (in `ambient`) as quotient data.
    pub(crate) fn from_quotient_basis(ambient: Arc<Ring>, basis: Vec<Poly>) -> Arc<Ring> {
        let ambient = ambient.ambient();
        Arc::new(Ring {
            field: ambient.field,
            vars: ambient.vars.clone(),
            order: ambient.order,
            quotient: if basis.is_empty() { None } else { Some(Quotient { ambient, basis }) },
        })
    }

    /// The free polynomial ring this ring is a quotient of (itself when free).
    pub fn ambient(self: &Arc<Self>) -> Arc<Ring> {
        match &self.quotient {
            Some(q) => q.ambient.clone(),
            None => self.clone(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_quotient(&self) -> bool {
        self.quotient.is_some()
    }

    /// Reduced Gröbner basis of the defining ideal, as polynomials of the ambient ring.
    pub fn quotient_basis(&self) -> &[Poly] {
        self.quotient.as_ref().map(|q| q.basis.as_slice()).unwrap_or(&[])
    }

    /// Finite-dimensional over the base field: every variable has a pure power
    /// among the leading monomials of the defining basis.
    pub fn is_zero_dimensional(&self) -> bool {
        (0..self.arity()).all(|i| {
            self.quotient_basis()
                .iter()
                .any(|g| g.leading_monomial().and_then(|m| m.as_pure_power()).map(|(j, _)| j == i).unwrap_or(false))
        })
    }

    /// Standard monomials (not divisible by any leading monomial of the defining
    /// basis), sorted ascending in the ring order. `None` if there are infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        if !self.is_zero_dimensional() {
            return None;
        }
        let n = self.arity();
        let bounds: Vec<u32> = (0..n)
            .map(|i| {
                self.quotient_basis()
                    .iter()
                    .filter_map(|g| g.leading_monomial().and_then(|m| m.as_pure_power()))
                    .filter(|(j, _)| *j == i)
                    .map(|(_, a)| a)
                    .min()
                    .unwrap_or(1)
            })
            .collect();
        let leads: Vec<Monomial> = self.quotient_basis().iter().filter_map(|g| g.leading_monomial().cloned()).collect();
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        loop {
            let m = Monomial::new(exps.clone());
            if !leads.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            let mut i = 0;
            loop {
                if i == n {
                    out.sort_by(|a, b| self.order.cmp(a, b));
                    return Some(out);
                }
                exps[i] += 1;
                if exps[i] < bounds[i] {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))?;
        if let Some(q) = &self.quotient {
            let rels: Vec<String> = q.basis.iter().map(|g| g.to_string()).collect();
            write!(f, "/({})", rels.join(", "))?;
        }
        Ok(())
    }
}
