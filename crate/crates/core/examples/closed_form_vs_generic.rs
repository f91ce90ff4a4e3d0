//! Compares the closed-form cone reduction with Gaussian elimination on
//! a handful of symmetric staircases of each pointing and parity.
//!
//! Run with `cargo run --example closed_form_vs_generic`.

use involutive_upsilon::reduction::{essential_profile, strip_acyclic};
use involutive_upsilon::{
    classify, closed_form_cone_reduction, materialize_closed_form, reduce_bifiltered, Knot, Sign,
    StaircaseSpec,
};

fn main() -> involutive_upsilon::Result<()> {
    let halves: [&[u32]; 5] = [&[1], &[1, 1], &[2, 1], &[1, 2, 1], &[3, 1, 1, 2]];
    for half in halves {
        for sign in [Sign::Positive, Sign::Negative] {
            let spec = StaircaseSpec::symmetric_from_half(half, sign)?;
            let class = classify(&spec)?;
            let out = closed_form_cone_reduction(&spec)?;
            let generic = reduce_bifiltered(&Knot::from_staircase(&spec).cone()?).reduced;
            let agree = essential_profile(&generic) == essential_profile(&materialize_closed_form(&out));
            println!(
                "{sign}{:?}: k = {}, s = {}, {:?}; v₀ at {:?} in grading {}, tail {:?}; reduced cone has {} generators, {} essential; {}",
                spec.steps(),
                class.k,
                class.s,
                class.pointing,
                out.v0_bidegree,
                out.v0_grading,
                out.tail_steps,
                generic.len(),
                strip_acyclic(&generic).len(),
                if agree { "agree" } else { "DISAGREE" },
            );
        }
    }
    Ok(())
}
