//! Runs the built-in cross-check suites with a smaller budget than the
//! `verify` subcommand defaults.
//!
//! Run with `cargo run --example verify_suite`.

use std::process::ExitCode;

use involutive_upsilon::verify::{run_all, VerifyOptions};

fn main() -> ExitCode {
    let opts = VerifyOptions {
        max_steps: 6,
        grid_denominator: 6,
        trials: 10,
        boxes: 5,
        ..VerifyOptions::default()
    };
    let reports = run_all(&opts);
    for r in &reports {
        println!("{r}");
    }
    if reports.iter().all(|r| r.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
