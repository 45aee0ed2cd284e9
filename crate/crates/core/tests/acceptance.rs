//! Acceptance suite: runs every verification criterion and prints one
//! pass/fail line each. `cargo test --test acceptance -- --nocapture`
//! shows the lines; the `verify-suite` subcommand prints the same ones.

use latsurg::verify::{run_criterion, CRITERION_COUNT};

fn check(id: usize) {
    let outcome = run_criterion(id);
    println!("{outcome}");
    assert!(outcome.pass, "{outcome}");
}

#[test]
fn criterion_01_lens_closed_form() {
    check(1);
}

#[test]
fn criterion_02_characterization_corpus() {
    check(2);
}

#[test]
fn criterion_03_enumeration_oracle() {
    check(3);
}

#[test]
fn criterion_04_beta_bound_sweep() {
    check(4);
}

#[test]
fn criterion_05_l_bound_family() {
    check(5);
}

#[test]
fn criterion_06_standardness_control() {
    check(6);
}

#[test]
fn criterion_07_sharp_linear_plumbings() {
    check(7);
}

#[test]
fn criterion_08_torus_lens_end_to_end() {
    check(8);
}

#[test]
fn criterion_09_casson_walker_shadow() {
    check(9);
}

#[test]
fn criterion_10_delta_torsion_identity() {
    check(10);
}

#[test]
fn criterion_ids_are_exhaustive() {
    assert_eq!(CRITERION_COUNT, 10);
}
