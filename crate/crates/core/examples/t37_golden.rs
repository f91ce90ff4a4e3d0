//! The involutive Upsilon functions of T(3,7), computed both ways.
//!
//! Run with `cargo run --example t37_golden`.

use involutive_upsilon::job::{evaluate, Engine, Invariant};
use involutive_upsilon::upsilon::{NuEngine, Which};
use involutive_upsilon::Rational;

fn main() -> involutive_upsilon::Result<()> {
    let invariants: Vec<Invariant> = Which::ALL.into_iter().map(Invariant::Upsilon).collect();
    // `Both` runs the generic cone reduction and the closed form and fails on any disagreement.
    let report = evaluate("torus:3,7", &invariants, Engine::Both, false, NuEngine::default())?;
    println!("{}", report.label);
    let half = Rational::new(1, 2);
    for (which, f) in &report.functions {
        println!("  {}: {f}    (at t = 1/2: {})", which.symbol(), f.eval(half)?);
    }
    Ok(())
}
