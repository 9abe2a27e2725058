//! Exact congruence diagonalization and the inertia relations between a
//! symmetric form and its one-step borderings.

use knotcover::algebra::{congruence_diagonalize, rat, SymmetricForm};
use knotcover::symforms::{det_relation, inertia, inertia_both_orders, verify_bordered_lemma, BorderedTriple};

fn main() {
    let a0 = SymmetricForm::from_ints(&[vec![0, 1], vec![1, 0]]).unwrap();
    let d = congruence_diagonalize(&a0);
    println!("A0 = [[0, 1], [1, 0]] diagonalizes to {:?}", d.pivots.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    let (lead, trail) = inertia_both_orders(&a0);
    println!("inertia {:?}, both pivot orders agree: {}", lead, lead == trail);

    let t = BorderedTriple::new(rat(-1), vec![rat(2), rat(-1)], a0);
    for (name, form) in [("A+", t.plus()), ("A-", t.minus()), ("A0", t.zero().clone())] {
        let i = inertia(&form);
        println!("{name}: sigma {} nu {} sgn' {} epsilon {}", i.signature, i.nullity, i.sign, i.epsilon());
    }
    let mut r = verify_bordered_lemma(&t);
    r.extend(det_relation(&t));
    for c in &r.checks {
        println!("  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name);
    }
}
