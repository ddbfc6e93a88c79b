//! Operations failing exactly one closure axiom, with certificates.

use idealclose::closure::{Budget, ClosureOperation};
use idealclose::groebner::Ideal;
use idealclose::poly::{Field, Ring};
use idealclose::standard::{preclosure_suite, ratliff_rush_order_search, ratliff_rush_stage, RatliffRush};

fn main() -> idealclose::Result<()> {
    let b = Budget::default();
    for p in preclosure_suite()? {
        let shown: Vec<String> = p.certificate.witnesses.iter().map(|w| w.to_string()).collect();
        println!(
            "{}: fails {} at {} (verified: {})",
            p.op.name(),
            p.certificate.axiom,
            shown.join(" <= "),
            p.verify(&b)?
        );
    }

    let q = Ring::polynomial(Field::Rational, &["x", "y"])?;
    let i = Ideal::parse(&q, &["x^4", "x^3*y", "x*y^3", "y^4"])?;
    println!("(I^2 : I) = {}", ratliff_rush_stage(&i, 1)?);
    println!("bounded Ratliff-Rush closure = {}", RatliffRush.close(&i, &b)?);
    match ratliff_rush_order_search(&q, 4, &b)? {
        Some((j, k, f)) => println!("order fails: {j} <= {k} but {f} escapes"),
        None => println!("no order failure among ideals generated in degree <= 4"),
    }
    Ok(())
}
