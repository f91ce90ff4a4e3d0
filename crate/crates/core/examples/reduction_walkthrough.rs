//! Step-by-step pipeline for the trefoil: staircase, involution, fold,
//! mapping cone, reduction and the resulting Upsilon functions.
//!
//! Run with `cargo run --example reduction_walkthrough`.

use involutive_upsilon::io::complex_to_json;
use involutive_upsilon::upsilon::{upsilon, Which};
use involutive_upsilon::{reduce_bifiltered, steps_from_torus_knot, BifilteredComplex, Knot};

fn describe(name: &str, c: &BifilteredComplex) {
    println!("{name}: {} generators, {} arrows, homology ranks {:?}", c.len(), c.arrow_count(), c.homology_ranks());
    for g in c.generators() {
        println!("    {:<8} gr {:>2}  ({:>2}, {:>2})", g.id, g.grading, g.f1, g.f2);
    }
}

fn main() -> involutive_upsilon::Result<()> {
    let knot = Knot::from_staircase(&steps_from_torus_knot(2, 3)?);
    describe("staircase", &knot.complex);
    println!("involution as JSON:\n{}", complex_to_json(&knot.complex, knot.involution.as_ref()));

    describe("fold", &knot.folded());
    let cone = knot.cone()?;
    describe("cone", &cone);

    let result = reduce_bifiltered(&cone);
    println!("cancelled pairs:");
    for (a, b) in &result.eliminated_pairs {
        println!("    {a} -> {b}");
    }
    describe("reduced cone", &result.reduced);

    for which in Which::ALL {
        println!("{}: {}", which.symbol(), upsilon(&knot, which)?);
    }
    Ok(())
}
