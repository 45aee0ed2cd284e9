//! The concordance-style slope bound: the largest n at which the
//! correction-term inequality β(n) ≤ 4·d(S³_n(K), i) fails upper-bounds
//! the largest slope whose surgery can bound a non-standard lattice, and
//! it never exceeds 4·g4 + 3.
//!
//! Run with: cargo run --example concordance_bound

use latsurg::knot::{KnotModel, VSequence};
use latsurg::surgery::{beta, beta_bound_check, l_upper_bound, BetaBound};
use latsurg::rational::render;

fn main() {
    println!("beta(n) for small n:");
    for n in 1..=8 {
        println!("  beta({n}) = {}", render(&beta(n)));
    }

    println!("\nslope bounds:");
    for (name, v) in [
        ("unknot".to_string(), VSequence::zero()),
        knot_v(2, 3),
        knot_v(2, 5),
        knot_v(2, 7),
        knot_v(2, 9),
    ] {
        let bound = l_upper_bound(&v);
        let threshold = 4 * v.slice_genus() + 3;
        println!("  {name}: l-bound {bound}, 4*g4+3 = {threshold}");
        assert!(bound <= threshold);
    }

    // where exactly the trefoil bound fails, and where it starts holding
    let v = knot_v(2, 3).1;
    println!("\ntrefoil beta-bound scan:");
    for n in 1..=10 {
        match beta_bound_check(&v, n) {
            BetaBound::Holds => println!("  n = {n:2}: holds"),
            BetaBound::FailsAt(i) => println!("  n = {n:2}: fails at index {i}"),
        }
    }
}

fn knot_v(p: u64, q: u64) -> (String, VSequence) {
    let knot = KnotModel::torus_knot(p, q).unwrap();
    (knot.name.clone(), knot.v_sequence().unwrap())
}
