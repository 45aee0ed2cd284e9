//! Exact lattice analysis: construction, determinants, discriminant
//! groups, unit-vector splitting, and the characterization report tying
//! the minimum characteristic norm to standardness.
//!
//! Run with: cargo run --example lattice_analysis

use latsurg::lattice::GramLattice;
use latsurg::lens::linear_lattice;
use latsurg::rational::render;

fn analyze(name: &str, lattice: &GramLattice) {
    let group = lattice.discriminant_group();
    let report = lattice.owens_strle_check().expect("characterization holds");
    println!("{name}:");
    println!("  rank {} determinant {}", lattice.rank(), lattice.determinant());
    println!("  discriminant group: {group}");
    println!(
        "  min characteristic norm {} at {:?}",
        render(&report.min_norm),
        report.witness.coords()
    );
    println!(
        "  bound {} ({}) — gap is a multiple of {}",
        render(&report.bound),
        if report.split.is_standard() {
            "attained: standard"
        } else {
            "strict: non-standard"
        },
        render(&report.congruence_step)
    );
}

fn main() {
    analyze("<1>^3", &GramLattice::diagonal(&[1, 1, 1]).unwrap());
    analyze("<5>", &GramLattice::diagonal(&[5]).unwrap());
    analyze("<6> + <1>^2", &GramLattice::diagonal(&[6, 1, 1]).unwrap());

    // the linear lattice of 11/4 has no unit vectors
    analyze("linear lattice of 11/4", &linear_lattice(11, 4).unwrap());

    // a lattice that splits a unit vector off a dense Gram matrix
    let split = GramLattice::from_rows(&[vec![1, 1], vec![1, 4]]).unwrap();
    analyze("[[1,1],[1,4]]", &split);
    println!("  split verdict: {:?}", split.split_standard());

    // direct sums compose determinants multiplicatively
    let sum = linear_lattice(3, 1)
        .unwrap()
        .direct_sum(&GramLattice::diagonal(&[1, 1]).unwrap());
    analyze("<3> + <1>^2 as a direct sum", &sum);
}
