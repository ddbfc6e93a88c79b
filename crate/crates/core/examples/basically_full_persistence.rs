//! Basically full closure does not persist along an inclusion of local rings.

use idealclose::closure::{Budget, ClosureOperation};
use idealclose::finite::persistence_check;
use idealclose::groebner::{Ideal, RingMap};
use idealclose::poly::{parse_poly, Field, Ring};
use idealclose::standard::BasicallyFull;

fn main() -> idealclose::Result<()> {
    let b = Budget::default();
    let f2 = Field::prime(2)?;
    let r = Ring::quotient_str(&Ring::polynomial(f2, &["x", "y"])?, &["x^2", "x*y"])?;
    let s = Ring::quotient_str(&Ring::polynomial(f2, &["x", "y", "z"])?, &["x^2", "x*y", "z^2"])?;
    let y = Ideal::parse(&r, &["y"])?;
    println!("in {r}: (y)^bf = {}", BasicallyFull::new().close(&y, &b)?);

    let inc = RingMap::by_names(&r, &s)?;
    println!("in {s}: ((y)S)^bf = {}", BasicallyFull::new().close(&inc.extend(&y)?, &b)?);
    let report = persistence_check(&inc, &BasicallyFull::new(), &BasicallyFull::new(), &[y], &b)?;
    for v in &report.violations {
        println!("escapes: {} (from {}, target closure {})", v.witnesses[1], v.witnesses[0], v.witnesses[2]);
    }
    let n = Ideal::variables(&s);
    let zx = parse_poly(&s, "z*x")?;
    println!("zx in n*x: {}", n.scale(&parse_poly(&s, "x")?)?.contains(&zx));
    println!("zx in n*y: {}", n.scale(&parse_poly(&s, "y")?)?.contains(&zx));
    Ok(())
}
