//! Loads a hand-written complex with an involution from JSON and computes
//! its invariants. The bundled file is the figure-eight knot: a single
//! generator plus an acyclic box whose side corners the involution swaps.
//!
//! Run with `cargo run --example custom_complex_json -- [path]`.

use std::path::PathBuf;

use involutive_upsilon::io::read_knot_file;
use involutive_upsilon::upsilon::{upsilon, v0_invariants, Which};

fn main() -> involutive_upsilon::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data/figure_eight.json"));
    let knot = read_knot_file(&path)?;
    println!("{}: {} generators, width {}", path.display(), knot.complex.len(), knot.width());
    for which in Which::ALL {
        println!("  {}: {}", which.symbol(), upsilon(&knot, which)?);
    }
    let (hi, lo) = v0_invariants(&knot)?;
    println!("  V̄₀ = {hi}, V̲₀ = {lo}");
    Ok(())
}
