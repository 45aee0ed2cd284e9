//! Sharp fillings: linear plumbings realize every correction term of the
//! reversed-orientation lens space with equality, while a standard form
//! can only be sharp for a surgery on the unknot — which is what drives
//! the slope bound for sharp fillings.
//!
//! Run with: cargo run --example sharp_fillings

use latsurg::knot::KnotModel;
use latsurg::lattice::GramLattice;
use latsurg::lens::{linear_lattice, LensSpace};
use latsurg::surgery::{sharpness_check, slope_bound_check, DInvariantTable, ObstructionMode};

fn main() {
    // the plumbing form <3> is sharp for the reversed lens space L(3,-1)
    let three = GramLattice::diagonal(&[3]).unwrap();
    let table = DInvariantTable::lens(&LensSpace::new(3, -1).unwrap());
    let report = sharpness_check(&three, &table, ObstructionMode::Matching).unwrap();
    println!("<3> vs L(3,-1): {:?}", report.verdict);

    // every linear plumbing with p <= 12 is sharp in matching mode
    println!("\nlinear plumbing sweep (p <= 12):");
    for p in 2..=12u64 {
        for q in 1..p {
            if num_integer::Integer::gcd(&p, &q) != 1 {
                continue;
            }
            let lattice = linear_lattice(p, q).unwrap();
            let reversed = DInvariantTable::lens(&LensSpace::new(p, q as i64).unwrap()).reversed();
            let report = sharpness_check(&lattice, &reversed, ObstructionMode::Matching).unwrap();
            assert!(report.verdict.passed(), "linear({p},{q})");
        }
        println!("  p = {p:2}: all sharp");
    }

    // torus-knot surgeries that are lens spaces: the surgery table equals
    // the lens table as a multiset, and the affine family witnesses it
    println!("\nS^3_(2n+1) on T(2,n) vs L(2n+1,4):");
    for n in [3u64, 5, 7] {
        let v = KnotModel::torus_knot(2, n).unwrap().v_sequence().unwrap();
        let p = 2 * n + 1;
        let surgery = DInvariantTable::surgery(&v, p);
        let lens = DInvariantTable::lens(&LensSpace::new(p, 4).unwrap());
        assert_eq!(surgery.sorted_values(), lens.sorted_values());
        let lattice = linear_lattice(p, 4).unwrap();
        let sharp =
            sharpness_check(&lattice, &surgery.reversed(), ObstructionMode::Affine).unwrap();
        println!("  n = {n}: multisets agree, affine sharpness {:?}", sharp.verdict);
    }

    // the other direction: a standard form is never sharp for a
    // non-trivial L-space knot, so such slopes stay within 4g+3
    println!("\nslope-bound consistency:");
    for (knot, n) in [
        (KnotModel::unknot(), 5u64),
        (KnotModel::torus_knot(2, 3).unwrap(), 5),
        (KnotModel::torus_knot(2, 5).unwrap(), 11),
    ] {
        let report = slope_bound_check(&knot, n).unwrap();
        println!(
            "  {} at n = {n}: standard sharpness {:?}, l-bound {}, 4g+3 = {}, consistent: {}",
            report.knot,
            report.standard_sharpness,
            report.l_upper_bound,
            report.genus_bound,
            report.consistent
        );
        assert!(report.consistent);
    }
}
