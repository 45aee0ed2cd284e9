//! The large-surgery classification in action: above slope 4·g4 + 3,
//! every positive definite filling form of a knot surgery is forced to be
//! standard, so non-standard candidates must flunk the correction-term
//! obstruction.
//!
//! Run with: cargo run --example surgery_standardness

use latsurg::knot::KnotModel;
use latsurg::lattice::GramLattice;
use latsurg::lens::linear_lattice;
use latsurg::surgery::{
    lattice_obstruction, standardness_verdict, DInvariantTable, ObstructionMode,
    StandardnessOutcome,
};

fn main() {
    let trefoil = KnotModel::torus_knot(2, 3).unwrap();
    let v = trefoil.v_sequence().unwrap();

    // 9 > 4*g4 + 3 = 7: the classification applies to 9-surgery
    let standard = GramLattice::diagonal(&[9, 1]).unwrap();
    let report = standardness_verdict(&trefoil, 9, &standard).unwrap();
    assert_eq!(report.outcome, StandardnessOutcome::StandardBranch);
    println!("<9> + <1> vs S^3_9(trefoil): standard branch");

    // the linear lattice of 9/2 has determinant 9 but no unit vectors,
    // so it must fail the obstruction
    let lam = linear_lattice(9, 2).unwrap();
    let report = standardness_verdict(&trefoil, 9, &lam).unwrap();
    assert_eq!(report.outcome, StandardnessOutcome::ObstructionFailBranch);
    println!("linear(9,2) vs S^3_9(trefoil): obstruction-fail branch");

    // at the threshold slope the classification says nothing: 11-surgery
    // on T(2,5) really does bound the non-standard linear(11,4)
    let t25 = KnotModel::torus_knot(2, 5).unwrap();
    let lam114 = linear_lattice(11, 4).unwrap();
    let report = standardness_verdict(&t25, 11, &lam114).unwrap();
    assert_eq!(report.outcome, StandardnessOutcome::Inconclusive);
    println!("linear(11,4) vs S^3_11(T(2,5)): inconclusive at the threshold slope");

    // and the obstruction cannot rule it out in any mode
    let table = DInvariantTable::surgery(&t25.v_sequence().unwrap(), 11);
    for mode in [
        ObstructionMode::Global,
        ObstructionMode::Matching,
        ObstructionMode::Affine,
    ] {
        let report = lattice_obstruction(&lam114, &table, mode).unwrap();
        println!(
            "  obstruction in {} mode: {}",
            mode.name(),
            if report.verdict.passed() { "pass" } else { "fail" }
        );
    }

    // sweep: every non-standard linear lattice with determinant n > 7
    // fails against trefoil surgeries
    println!("\nsweep n = 8..=14, trefoil tables vs linear lattices:");
    for n in 8..=14u64 {
        let table = DInvariantTable::surgery(&v, n);
        let mut failed = 0;
        let mut total = 0;
        for q in 2..n {
            if num_integer::Integer::gcd(&n, &q) != 1 {
                continue;
            }
            total += 1;
            let lam = linear_lattice(n, q).unwrap();
            let report = lattice_obstruction(&lam, &table, ObstructionMode::Global).unwrap();
            if !report.verdict.passed() {
                failed += 1;
            }
        }
        println!("  n = {n}: {failed}/{total} non-standard lattices obstructed");
        assert_eq!(failed, total);
    }
}
