//! Exact arithmetic over QQ and F_p, including a quotient ring.

use idealclose::groebner::Ideal;
use idealclose::poly::{parse_poly, Field, Ring};

fn main() -> idealclose::Result<()> {
    let q = Ring::polynomial(Field::Rational, &["x", "y"])?;
    let f = parse_poly(&q, "x^2 - 1/2*x*y + 3")?;
    let g = parse_poly(&q, "x - y")?;
    println!("({f}) * ({g}) = {}", &f * &g);
    println!("({g})^3 = {}", g.pow(3));

    let f5 = Ring::polynomial(Field::prime(5)?, &["x"])?;
    let h = parse_poly(&f5, "x + 1")?;
    println!("in F5[x]: ({h})^5 = {}", h.pow(5));

    let base = Ring::polynomial(Field::prime(2)?, &["x", "y"])?;
    let r = Ring::quotient_str(&base, &["x^2", "x*y", "y^2"])?;
    let u = parse_poly(&r, "1 + x + y")?;
    println!("in {r}: ({u})^2 = {}", &u * &u);
    println!("basis of {r}: {:?}", r.standard_monomials().unwrap().len());

    let i = Ideal::parse(&q, &["x^2", "x*y"])?;
    println!("x^3 + x*y^2 in {i}: {}", i.contains(&parse_poly(&q, "x^3 + x*y^2")?));
    Ok(())
}
