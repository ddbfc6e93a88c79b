//! The v-operation on F2[x,y]/(x^2,xy,y^2) is a closure operation but not semi-prime.

use idealclose::closure::{semiprime_check, Budget, ClosureOperation};
use idealclose::finite::{exhaustive_check, FiniteRing, IdealLattice};
use idealclose::groebner::Ideal;
use idealclose::poly::{Field, Ring};
use idealclose::standard::VOperation;

fn main() -> idealclose::Result<()> {
    let b = Budget::default();
    let base = Ring::polynomial(Field::prime(2)?, &["x", "y"])?;
    let r = Ring::quotient_str(&base, &["x^2", "x*y", "y^2"])?;
    let m = Ideal::variables(&r);
    println!("m_v = {}", VOperation.close(&m, &b)?);
    println!("(m^2)_v = {}", VOperation.close(&m.product(&m)?, &b)?);

    let report = semiprime_check(&VOperation, &[(m.clone(), m.clone())], &b)?;
    for v in &report.violations {
        println!("{}: {}", v.kind, v.witnesses.join(" | "));
    }

    let lattice = IdealLattice::new(FiniteRing::cached(&r)?)?;
    let all = exhaustive_check(&lattice, &VOperation, &b)?;
    println!("{} cases on {} ideals, {} violations", all.cases, lattice.len(), all.violations.len());
    Ok(())
}
