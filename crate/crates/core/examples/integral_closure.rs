//! Integral closure of monomial ideals through the Newton polyhedron.

use idealclose::closure::{Budget, ClosureOperation};
use idealclose::groebner::Ideal;
use idealclose::poly::{parse_poly, Field, Ring};
use idealclose::standard::{integral_membership_oracle, IntegralClosure, NewtonPolyhedron};

fn main() -> idealclose::Result<()> {
    let b = Budget::default();
    let q = Ring::polynomial(Field::Rational, &["x", "y"])?;
    for gens in [&["x^2", "y^2"][..], &["x^4", "x^3*y", "x*y^3", "y^4"], &["x^5", "y^3"]] {
        let i = Ideal::parse(&q, gens)?;
        println!("{i}- = {}", IntegralClosure.close(&i, &b)?);
    }
    let i = Ideal::parse(&q, &["x^2", "y^2"])?;
    for f in ["x*y", "x", "x*y^2"] {
        println!("{f} in {i}-: {}", IntegralClosure.member(&parse_poly(&q, f)?, &i, &b)?);
    }

    let gens = i.monomial_generators().unwrap();
    let newton = NewtonPolyhedron::new(2, &gens);
    println!("(1, 1) in the Newton polyhedron: {}", newton.contains(&[1, 1]));
    println!("power search for (1, 1) with n <= 8: {}", integral_membership_oracle(&[1, 1], &gens, 8));
    Ok(())
}
