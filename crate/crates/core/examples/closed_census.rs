//! Fixed points of several closures on small lattices, and the c_w construction.

use std::sync::Arc;

use idealclose::closure::{Budget, ClosureOp, ClosureOperation};
use idealclose::finite::{closed_census, Cw, FiniteRing, IdealLattice};
use idealclose::poly::{Field, Ring};
use idealclose::standard::{BasicallyFull, Frobenius, Radical, VOperation};

fn main() -> idealclose::Result<()> {
    let b = Budget::default();
    let base = Ring::polynomial(Field::prime(2)?, &["x", "y"])?;
    let r = Ring::quotient_str(&base, &["x^2", "x*y", "y^2"])?;
    let lattice = Arc::new(IdealLattice::new(FiniteRing::cached(&r)?)?);
    println!("{} ideals in {r}", lattice.len());

    let ops: Vec<ClosureOp> =
        vec![Arc::new(Radical), Arc::new(Frobenius), Arc::new(BasicallyFull::new()), Arc::new(VOperation)];
    for op in ops {
        let census = closed_census(&lattice, op.as_ref(), &b)?;
        let closed: Vec<String> = census.closed.iter().map(|&i| lattice.ideal(i).to_string()).collect();
        println!("{}: closed {}, maximal closed prime {:?}", op.name(), closed.join(" "), census.maximal_closed_prime);
        let cw = Cw::new(op, lattice.clone(), &b)?;
        println!("  {}: below {}", cw.name(), cw.check_below(&b)?.status());
    }
    Ok(())
}
