//! Frobenius closure, its special part, and reductions, spread and core on a small local ring.

use idealclose::closure::{Budget, ClosureOperation};
use idealclose::finite::{FiniteRing, IdealLattice};
use idealclose::poly::{Field, Ring};
use idealclose::reductions::{special_decomposition_check, special_part_axioms, ReductionContext};
use idealclose::standard::{Frobenius, FrobeniusSpecialPart};

fn main() -> idealclose::Result<()> {
    let b = Budget::default();
    let base = Ring::polynomial(Field::prime(2)?, &["x", "y"])?;
    let r = Ring::quotient_str(&base, &["x^2", "x*y", "y^2"])?;
    let lattice = IdealLattice::new(FiniteRing::cached(&r)?)?;

    for i in lattice.ideals() {
        println!("{i}: F = {}, F sp = {}", Frobenius.close(i, &b)?, FrobeniusSpecialPart.close(i, &b)?);
    }
    let axioms = special_part_axioms(&lattice, &FrobeniusSpecialPart, &Frobenius, &b)?;
    println!("special part axioms: {} over {} cases", axioms.status(), axioms.cases);
    let (decomposition, _) = special_decomposition_check(&lattice, &Frobenius, &FrobeniusSpecialPart, &b)?;
    println!("I^F = I + I^Fsp: {}", decomposition.status());

    let ctx = ReductionContext::new(&lattice, &Frobenius, &b)?;
    println!("Nakayama: {}", ctx.nakayama().status());
    for i in 0..lattice.len() {
        let report = ctx.report(i);
        let mins: Vec<&str> = report.minimal_reductions.iter().map(|m| m.ideal.as_str()).collect();
        println!("{}: minimal reductions {mins:?}, spread {:?}, core {}", report.ideal, report.spread, report.core);
    }
    Ok(())
}
