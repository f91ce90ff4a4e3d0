//! Writes an SVG plot of the four Upsilon functions of a knot.
//!
//! Run with `cargo run --example plot_svg -- [knot] [out.svg]`, for example
//! `cargo run --example plot_svg -- torus:4,5 t45.svg`.

use std::path::PathBuf;

use involutive_upsilon::io::write_file;
use involutive_upsilon::knotspec::parse_knot_spec;
use involutive_upsilon::svg::plot;
use involutive_upsilon::upsilon::{upsilon, Which};

fn main() -> involutive_upsilon::Result<()> {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "torus:3,7".to_string());
    let out = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("upsilon.svg"));
    let recipe = parse_knot_spec(&spec)?;
    let knot = recipe.build()?;
    let mut series = Vec::new();
    for which in Which::ALL {
        series.push((which.symbol().to_string(), upsilon(&knot, which)?));
    }
    write_file(&out, &plot(&recipe.to_string(), &series))?;
    println!("wrote {}", out.display());
    Ok(())
}
