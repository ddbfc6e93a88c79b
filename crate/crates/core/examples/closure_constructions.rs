//! Closures built from others, compared with their direct definitions.

use std::sync::Arc;

use idealclose::closure::{compare, Budget, ClosureOp, DirectedUnion, IdempotentHull, Intersection, ModuleClosure};
use idealclose::finite::{FiniteRing, IdealLattice};
use idealclose::groebner::Ideal;
use idealclose::poly::{parse_poly, Field, Ring};
use idealclose::standard::{
    BasicallyFull, ColonBy, Delta, DeltaSystem, Frobenius, FrobeniusStage, Radical, Saturation,
};

fn main() -> idealclose::Result<()> {
    let b = Budget::default();
    let base = Ring::polynomial(Field::prime(2)?, &["x", "y"])?;
    let r = Ring::quotient_str(&base, &["x^2", "y^2"])?;
    let lattice = IdealLattice::new(FiniteRing::cached(&r)?)?;
    let family = lattice.ideals();
    let m = Ideal::variables(&r);

    let hull = IdempotentHull::new(Arc::new(ColonBy::new(parse_poly(&r, "x")?)));
    let sat = Saturation::new(Ideal::parse(&r, &["x"])?);
    println!("sat((x)) vs hull(colon(x)): {}", compare(&sat, &hull, family, &b)?.order);

    let module = ModuleClosure::Ideal(m.clone());
    println!("bf vs modclosure(m): {}", compare(&BasicallyFull::new(), &module, family, &b)?.order);

    let delta = Delta::new(DeltaSystem::new(vec![m.clone()])?);
    let powers: Vec<ClosureOp> =
        (1..=3).map(|n| Arc::new(ModuleClosure::Ideal(m.power(n).unwrap())) as ClosureOp).collect();
    println!("delta[m] vs union of (Im^n : m^n): {}", compare(&delta, &DirectedUnion::new(powers), family, &b)?.order);

    let stages: Vec<ClosureOp> = (0..3).map(|e| Arc::new(FrobeniusStage { e }) as ClosureOp).collect();
    println!("frob vs union of stages: {}", compare(&Frobenius, &DirectedUnion::new(stages), family, &b)?.order);

    let meet = Intersection::new(vec![Arc::new(Radical), Arc::new(BasicallyFull::new())]);
    println!("meet(radical, bf) vs bf: {}", compare(&meet, &BasicallyFull::new(), family, &b)?.order);
    Ok(())
}
