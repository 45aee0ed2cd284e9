//! Runs the full verification corpus — the same ten exact criteria the
//! `verify-suite` subcommand and the acceptance test target execute.
//!
//! Run with: cargo run --release --example verification_corpus

use latsurg::verify;

fn main() {
    let outcomes = verify::run_all();
    for outcome in &outcomes {
        println!("{outcome}");
    }
    let failed = outcomes.iter().filter(|o| !o.pass).count();
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all {} criteria passed", outcomes.len());
}
