//! Involutive V0 invariants read off Upsilon at t = 2. Adding an acyclic
//! summand to a complex leaves them unchanged.
//!
//! Run with `cargo run --example v0_invariants`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use involutive_upsilon::upsilon::{upsilon, v0_invariants, Which};
use involutive_upsilon::verify::random_acyclic_summand;
use involutive_upsilon::{steps_from_torus_knot, Knot, Rational, Sign, StaircaseSpec};

fn show(label: &str, knot: &Knot) -> involutive_upsilon::Result<()> {
    let two = Rational::from_integer(2);
    let (hi, lo) = v0_invariants(knot)?;
    let u = upsilon(knot, Which::Upper)?.eval(two)?;
    let l = upsilon(knot, Which::Lower)?.eval(two)?;
    println!("{label:<20} V̄₀ = {hi:>2}, V̲₀ = {lo:>2}    Ῡ(2) = {u:>3}, Υ̲(2) = {l:>3}");
    Ok(())
}

fn main() -> involutive_upsilon::Result<()> {
    show("unknot", &Knot::unknot())?;
    for (p, q) in [(2, 3), (2, 5), (3, 4), (3, 7), (4, 5)] {
        let spec = steps_from_torus_knot(p, q)?;
        show(&format!("T({p},{q})"), &Knot::from_staircase(&spec))?;
        show(&format!("−T({p},{q})"), &Knot::from_staircase(&spec.with_sign(Sign::Negative)))?;
    }
    let a = Knot::from_staircase(&StaircaseSpec::symmetric_from_half(&[2, 1], Sign::Positive)?);
    show("+[2,1,1,2]", &a)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut padded = a.clone();
    for _ in 0..3 {
        padded = padded.direct_sum(&random_acyclic_summand(&mut rng))?;
    }
    show("+[2,1,1,2] ⊕ boxes", &padded)?;
    Ok(())
}
