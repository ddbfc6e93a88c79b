//! Gröbner bases and the ideal operations built on them.

use idealclose::groebner::{groebner_basis, GbLimits, Ideal, RingMap};
use idealclose::poly::{parse_poly, Field, MonomialOrder, Ring};

fn main() -> idealclose::Result<()> {
    let r = Ring::new(Field::Rational, &["x", "y", "z"], MonomialOrder::Lex)?;
    let gens = ["x^2 + y + z - 1", "x + y^2 + z - 1", "x + y + z^2 - 1"]
        .iter()
        .map(|s| parse_poly(&r, s))
        .collect::<idealclose::Result<Vec<_>>>()?;
    println!("reduced lex basis:");
    for g in groebner_basis(&gens, GbLimits::default())? {
        println!("  {g}");
    }

    let q = Ring::polynomial(Field::Rational, &["x", "y"])?;
    let i = Ideal::parse(&q, &["x^2", "x*y"])?;
    let j = Ideal::parse(&q, &["y^3"])?;
    println!("{i} + {j} = {}", i.sum(&j)?);
    println!("{i} * {j} = {}", i.product(&j)?);
    println!("{i} ∩ {j} = {}", i.intersection(&j)?);
    println!("({i} : (x)) = {}", i.colon(&Ideal::parse(&q, &["x"])?)?);
    println!("({i} : (x, y)^∞) = {}", i.saturation(&Ideal::variables(&q))?);

    let t = Ring::polynomial(Field::Rational, &["t"])?;
    let curve = RingMap::new(&q, &t, vec![parse_poly(&t, "t^2")?, parse_poly(&t, "t^3")?])?;
    println!("kernel of x -> t^2, y -> t^3: {}", curve.preimage(&Ideal::zero(&t))?);
    Ok(())
}
