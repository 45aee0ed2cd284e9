//! Shifted minimum enumeration: minimizing the dual pairing over a coset
//! of 2L* (a parity class) or of 2L (a spin-c coset), and the full
//! coset-minima map with its negation involution.
//!
//! Run with: cargo run --example characteristic_minima

use num_bigint::BigInt;
use latsurg::lattice::{CosetModulus, GramLattice};
use latsurg::rational::render;

fn main() {
    let three = GramLattice::diagonal(&[3]).unwrap();

    // odd integers minimizing xi^2/3
    let odd = three.shifted_min(&[BigInt::from(1)], CosetModulus::DualDoubled);
    println!(
        "min of xi^2/3 over odd xi: {} at {:?}",
        render(&odd.value),
        odd.witness
    );

    // the three cosets of 2L in the characteristic set of <3>
    println!("\ncoset minima of <3>:");
    for entry in three.char_coset_minima().iter() {
        println!(
            "  coset {:?} (rep {:?}): min {} at {:?}, negation -> {:?}",
            entry.label,
            entry.representative.coords(),
            render(&entry.minimum),
            entry.witness.coords(),
            entry.negated,
        );
    }

    // a rank-2 chain: minimum over the whole characteristic set
    let lam = GramLattice::from_rows(&[vec![3, -1], vec![-1, 4]]).unwrap();
    let (min_norm, witness) = lam.min_char_norm();
    println!(
        "\nmin characteristic norm of [[3,-1],[-1,4]]: {} at {:?}",
        render(&min_norm),
        witness.coords()
    );

    // the coset map refines the global minimum
    let minima = lam.char_coset_minima();
    println!("its {} coset minima:", minima.len());
    for entry in minima.iter() {
        println!("  {:?}: {}", entry.label, render(&entry.minimum));
    }
    assert_eq!(minima.min_entry().minimum, min_norm);

    // negation pairs cosets with equal minima
    for entry in minima.iter() {
        let partner = minima.get(&entry.negated).unwrap();
        assert_eq!(partner.minimum, entry.minimum);
    }
    println!("negation involution preserves every minimum");
}
