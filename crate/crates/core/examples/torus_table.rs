//! V0 pairs and Upsilon values at t = 1 for the small torus knots.
//!
//! Run with `cargo run --example torus_table -- [max_pq]` (default 35).

use involutive_upsilon::upsilon::{upsilon, v0_invariants, Which};
use involutive_upsilon::verify::torus_knots;
use involutive_upsilon::{steps_from_torus_knot, Knot, Rational};

fn main() -> involutive_upsilon::Result<()> {
    let max_pq = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(35);
    let one = Rational::from_integer(1);
    println!("{:<8} {:>5} {:>5} {:>6} {:>6} {:>6} {:>6}", "knot", "V̄₀", "V̲₀", "Υ(1)", "Υᶠ(1)", "Ῡ(1)", "Υ̲(1)");
    for (p, q) in torus_knots(max_pq) {
        let knot = Knot::from_staircase(&steps_from_torus_knot(p, q)?);
        let (hi, lo) = v0_invariants(&knot)?;
        let mut at_one = Vec::new();
        for which in Which::ALL {
            at_one.push(upsilon(&knot, which)?.eval(one)?);
        }
        println!(
            "{:<8} {:>5} {:>5} {:>6} {:>6} {:>6} {:>6}",
            format!("T({p},{q})"),
            hi,
            lo,
            at_one[0],
            at_one[1],
            at_one[2],
            at_one[3]
        );
    }
    Ok(())
}
