//! Knot input layer: torus-knot Alexander polynomials, torsion
//! coefficients, V-sequences, and the second derivative at 1.
//!
//! Run with: cargo run --example knot_invariants

use latsurg::knot::{torus_alexander, KnotModel};
use latsurg::surgery::{unknot_check, UnknotVerdict};

fn main() {
    for q in [3u64, 5, 7, 9, 11] {
        let alexander = torus_alexander(2, q).unwrap();
        let knot = KnotModel::torus_knot(2, q).unwrap();
        let v = knot.v_sequence().unwrap();
        println!("T(2,{q}):");
        println!("  alexander: {alexander}");
        println!("  torsion coefficients: {:?}", alexander.torsion_coefficients());
        println!("  V = {:?}, slice genus {}", v.values(), v.slice_genus());
        println!("  delta''(1) = {}", alexander.second_derivative_at_one());
    }

    // parsing the document format
    let trefoil = KnotModel::parse_knot(
        r#"{"name": "trefoil", "alexander": [[0, -1], [1, 1]],
            "slice_genus": 1, "l_space": true}"#,
    )
    .unwrap();
    println!("\nparsed {}: V = {:?}", trefoil.name, trefoil.v_sequence().unwrap().values());

    // vanishing second derivative detects the unknot among L-space knots
    let unknot = KnotModel::unknot();
    assert_eq!(
        unknot_check(unknot.alexander.as_ref().unwrap()),
        UnknotVerdict::Unknot
    );
    assert_eq!(
        unknot_check(trefoil.alexander.as_ref().unwrap()),
        UnknotVerdict::NonTrivial
    );
    println!("unknot detection: delta''(1) = 0 exactly for the unknot");
}
