//! Gröbner bases, ideals of (quotient) polynomial rings and ring maps.

mod buchberger;
mod ideal;
mod map;

use std::sync::Arc;

pub use buchberger::{groebner_basis, normal_form, GbLimits};
pub use ideal::Ideal;
pub use map::RingMap;

use crate::error::{Error, Result};
use crate::poly::{parse_poly, Poly, Ring};

impl Ring {
    /// `base / (relations)`. A quotient of a quotient is flattened onto the
    /// common ambient polynomial ring.
    pub fn quotient(base: &Arc<Ring>, relations: &[Poly]) -> Result<Arc<Ring>> {
        if relations.iter().any(|r| r.ring() != base) {
            return Err(Error::RingMismatch);
        }
        let mut gens: Vec<Poly> = relations.iter().map(Poly::lift).collect();
        gens.extend(base.quotient_basis().iter().cloned());
        let basis = groebner_basis(&gens, GbLimits::default())?;
        if basis.len() == 1 && basis[0].is_constant() {
            return Err(Error::invalid("the defining ideal is the unit ideal"));
        }
        Ok(Ring::from_quotient_basis(base.ambient(), basis))
    }

    /// `quotient` with relations in textual form.
    pub fn quotient_str(base: &Arc<Ring>, relations: &[&str]) -> Result<Arc<Ring>> {
        let rels = relations.iter().map(|s| parse_poly(base, s)).collect::<Result<Vec<_>>>()?;
        Ring::quotient(base, &rels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    fn f2(vars: &[&str]) -> Arc<Ring> {
        Ring::polynomial(Field::prime(2).unwrap(), vars).unwrap()
    }

    #[test]
    fn intersection_of_monomial_ideals() {
        let r = Ring::polynomial(Field::Rational, &["x", "y"]).unwrap();
        let a = Ideal::parse(&r, &["x^2", "y"]).unwrap();
        let b = Ideal::parse(&r, &["x"]).unwrap();
        let m = a.intersection(&b).unwrap();
        assert_eq!(m, Ideal::parse(&r, &["x^2", "x*y"]).unwrap());
    }

    #[test]
    fn colon_and_saturation() {
        let r = Ring::polynomial(Field::Rational, &["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x^2*y", "x*y^2"]).unwrap();
        let x = parse_poly(&r, "x").unwrap();
        assert_eq!(i.colon_poly(&x).unwrap(), Ideal::parse(&r, &["x*y", "y^2"]).unwrap());
        let m = Ideal::variables(&r);
        assert_eq!(i.saturation(&m).unwrap(), Ideal::parse(&r, &["x*y"]).unwrap());
        assert!(i.colon(&Ideal::zero(&r)).unwrap().is_unit());
    }

    #[test]
    fn quotient_ring_ideals() {
        let r = Ring::quotient_str(&f2(&["x", "y"]), &["x^2", "x*y", "y^2"]).unwrap();
        assert!(r.is_zero_dimensional());
        assert_eq!(r.standard_monomials().unwrap().len(), 3);
        let x = Ideal::parse(&r, &["x"]).unwrap();
        let m = Ideal::variables(&r);
        assert_eq!(x.colon(&m).unwrap(), m);
        assert!(m.product(&m).unwrap().is_zero());
        assert_eq!(Ideal::zero(&r).colon(&m).unwrap(), m);
        assert_eq!(x.to_string(), "(x)");
    }

    #[test]
    fn radical_membership() {
        let r = Ring::polynomial(Field::Rational, &["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x^3", "y^2 - x"]).unwrap();
        assert!(i.radical_contains(&parse_poly(&r, "y").unwrap()).unwrap());
        assert!(!i.radical_contains(&parse_poly(&r, "y + 1").unwrap()).unwrap());
    }

    #[test]
    fn map_preimage_along_inclusion_and_projection() {
        let s = f2(&["x", "y", "z"]);
        let r = f2(&["x", "y"]);
        let inc = RingMap::by_names(&r, &s).unwrap();
        let l = Ideal::parse(&s, &["x*z", "y"]).unwrap();
        assert_eq!(inc.preimage(&l).unwrap(), Ideal::parse(&r, &["y"]).unwrap());

        let q = Ring::quotient_str(&r, &["x^2"]).unwrap();
        let proj = RingMap::by_names(&r, &q).unwrap();
        assert_eq!(proj.preimage(&Ideal::zero(&q)).unwrap(), Ideal::parse(&r, &["x^2"]).unwrap());
        assert!(RingMap::by_names(&q, &r).is_err());
    }
}
