//! Correction terms of lens spaces: the closed form for L(n,1), the
//! general recursion, orientation reversal, and conjugation symmetry.
//!
//! Run with: cargo run --example lens_correction_terms

use latsurg::lens::{d_lens, d_lens_n1, LensSpace};
use latsurg::rational::render;

fn main() {
    // L(3,1) from the closed form ((2i-n)^2 - n) / 4n
    println!("d(L(3,1), i):");
    for i in 0..3 {
        println!("  i = {i}: {}", render(&d_lens_n1(3, i).unwrap()));
    }

    // the recursion computes any coprime pair
    println!("\nd(L(11,4), i):");
    for i in 0..11 {
        println!("  i = {i}: {}", render(&d_lens(11, 4, i).unwrap()));
    }

    // negative surgery coefficients normalize: L(7,-2) = L(7,5)
    let space = LensSpace::new(7, -2).unwrap();
    println!("\nL(7,-2) normalizes to {space}:");
    for (i, d) in space.correction_terms().iter().enumerate() {
        println!("  i = {i}: {}", render(d));
    }

    // orientation reversal negates the multiset of correction terms
    let reversed = space.reversed();
    let mut forward: Vec<_> = space.correction_terms().iter().map(|d| -d).collect();
    let mut backward = reversed.correction_terms();
    forward.sort();
    backward.sort();
    assert_eq!(forward, backward);
    println!("\n{reversed} carries the negated correction terms of {space}");

    // values are invariant under the spin-c conjugation i -> (p+q-1-i) mod p
    for i in 0..7 {
        let j = space.conjugate_index(i);
        assert_eq!(
            space.correction_term(i).unwrap(),
            space.correction_term(j).unwrap()
        );
    }
    println!("conjugation symmetry checked on {space}");
}
