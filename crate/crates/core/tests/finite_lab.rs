mod common;

use std::sync::Arc;

use common::*;
use idealclose::closure::{compare, Budget, ClosureOperation, Order, Status};
use idealclose::finite::{closed_census, Cw, FiniteRing, IdealLattice};
use idealclose::groebner::Ideal;
use idealclose::reductions::nakayama_check;
use idealclose::standard::{Frobenius, Identity, Indiscrete, Radical, VOperation};

#[test]
fn lattices_match_brute_force_enumeration() {
    let rings = [
        ring(2, &["x", "y"], &["x^2", "x*y", "y^2"]),
        ring(2, &["x"], &["x^3"]),
        ring(2, &["x", "y"], &["x^2", "y^2"]),
        ring(3, &["x"], &["x^3"]),
        ring(2, &["x"], &["x^2 + x"]),
        ring(2, &["x", "y"], &["x^2", "x*y", "y^3"]),
    ];
    for r in &rings {
        let fr = FiniteRing::cached(r).unwrap();
        let lattice = IdealLattice::new(fr.clone()).unwrap();
        let mut engine: Vec<ElemSet> = lattice.ideals().iter().map(|i| elements_of(&fr, i)).collect();
        engine.sort();
        assert_eq!(engine, all_ideals(&fr), "{r}");
        for i in 0..lattice.len() {
            for j in 0..lattice.len() {
                let (a, b) = (elements_of(&fr, lattice.ideal(i)), elements_of(&fr, lattice.ideal(j)));
                let prod = elements_of(&fr, lattice.ideal(lattice.product(i, j)));
                assert_eq!(prod, product(&fr, &a, &b), "{r}");
                let col = elements_of(&fr, lattice.ideal(lattice.colon(i, j)));
                assert_eq!(col, colon(&fr, &a, &b), "{r}");
            }
        }
    }
}

#[test]
fn census_of_frobenius_and_v() {
    let b = Budget::default();
    let l = lattice(2, &["x", "y"], &["x^2", "x*y", "y^2"]);
    let frob = closed_census(&l, &Frobenius, &b).unwrap();
    // 0^F = m, so only m and R are closed
    assert_eq!(frob.closed.len(), 2);
    assert!(!frob.zero_closed);
    assert_eq!(frob.maximal_closed_prime, vec![true]);

    let v = closed_census(&l, &VOperation, &b).unwrap();
    // the three principal lines of m are v-closed and maximal, none prime
    assert_eq!(v.maximal_closed.len(), 3);
    assert!(v.maximal_closed_prime.iter().all(|p| !p));
    assert!(v.zero_closed);
    assert!(v.non_closed_meets.is_empty());
}

#[test]
fn cw_of_v_is_not_below_v() {
    let b = Budget::default();
    let l = Arc::new(lattice(2, &["x", "y"], &["x^2", "x*y", "y^2"]));
    let r = l.ring().ring().clone();
    let cw = Cw::new(Arc::new(VOperation), l.clone(), &b).unwrap();
    assert!(!cw.maximal_are_prime());
    assert_eq!(cw.close(&Ideal::zero(&r), &b).unwrap(), Ideal::variables(&r));
    assert_eq!(VOperation.close(&Ideal::zero(&r), &b).unwrap(), Ideal::zero(&r));
    assert_eq!(cw.check_below(&b).unwrap().status(), Status::Fail);

    // for a semi-prime closure the maximal closed ideals are prime and cw stays below
    let cw_rad = Cw::new(Arc::new(Radical), l.clone(), &b).unwrap();
    assert!(cw_rad.maximal_are_prime());
    assert_eq!(cw_rad.check_below(&b).unwrap().status(), Status::Pass);
    let cw_id = Cw::new(Arc::new(Identity), l.clone(), &b).unwrap();
    assert_eq!(compare(&cw_id, &Identity, l.ideals(), &b).unwrap().order, Order::Equal);
}

#[test]
fn nakayama_property() {
    let b = Budget::default();
    let a = lattice(2, &["x", "y"], &["x^2", "x*y", "y^2"]);
    assert_eq!(nakayama_check(&a, &Frobenius, &b).unwrap().status(), Status::Pass);
    assert_eq!(nakayama_check(&a, &Identity, &b).unwrap().status(), Status::Pass);
    assert_eq!(nakayama_check(&a, &VOperation, &b).unwrap().status(), Status::Fail);
}

#[test]
fn indiscrete_dominates_everything() {
    let b = Budget::default();
    for (name, l) in small_lattices() {
        for op in [&Identity as &dyn ClosureOperation, &Radical, &Frobenius, &VOperation] {
            let cmp = compare(&Indiscrete, op, l.ideals(), &b).unwrap();
            assert!(matches!(cmp.order, Order::Greater | Order::Equal), "{} on {name}", op.name());
        }
        let cmp = compare(&Frobenius, &Radical, l.ideals(), &b).unwrap();
        assert!(matches!(cmp.order, Order::Less | Order::Equal), "frob vs radical on {name}");
    }
}
