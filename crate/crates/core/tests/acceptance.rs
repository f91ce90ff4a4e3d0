//! Acceptance criteria, one printed PASS/FAIL line each.
//!
//! All comparisons are exact (rational arithmetic, zero tolerance); the only
//! numeric thresholds are the runtime budgets below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use involutive_upsilon::job::{evaluate, Engine, Invariant};
use involutive_upsilon::pl::PlFunction;
use involutive_upsilon::reduction::{
    closed_form_cone_reduction, essential_profile, materialize_closed_form, reduce_bifiltered,
};
use involutive_upsilon::upsilon::{upsilon, v0_invariants, NuEngine, Which};
use involutive_upsilon::verify::{self, VerifyOptions};
use involutive_upsilon::{steps_from_torus_knot, Knot, Rational, Sign};

const GOLDEN_BUDGET: Duration = Duration::from_secs(1);
const CLOSED_FORM_BUDGET: Duration = Duration::from_secs(60);
const FIGURES_BUDGET: Duration = Duration::from_secs(1);
const VERIFY_BUDGET: Duration = Duration::from_secs(120);
/// Largest first-half sum of the symmetric staircases in criterion 2.
const CLOSED_FORM_MAX_HALF: u32 = 10;
const GRID_DENOMINATOR: i64 = 12;
const BOXES_PER_KNOT: usize = 20;
const SEED: u64 = 0x1A5C_EE5D;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn pl(points: &[(Rational, i64)]) -> PlFunction {
    PlFunction::new(points.iter().map(|&(t, v)| (t, Rational::from_integer(v))).collect()).unwrap()
}

fn within(label: &str, start: Instant, budget: Duration) -> Result<(), String> {
    let elapsed = start.elapsed();
    if elapsed <= budget {
        Ok(())
    } else {
        Err(format!("{label} took {elapsed:.2?}, budget {budget:?}"))
    }
}

fn reports(rs: &[verify::CheckReport]) -> Outcome {
    let cases: usize = rs.iter().map(|r| r.cases).sum();
    let failed: Vec<String> = rs.iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
    if failed.is_empty() {
        Ok(format!("{cases} cases"))
    } else {
        Err(failed.join("; "))
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let upper_expected = pl(&[(r(0, 1), 0), (r(2, 3), -4), (r(2, 1), -4)]);
    let lower_expected = PlFunction::constant(-4);
    let inv = [Invariant::Upsilon(Which::Upper), Invariant::Upsilon(Which::Lower)];
    let report = evaluate("torus:3,7", &inv, Engine::Both, false, NuEngine::default())
        .map_err(|e| e.to_string())?;
    let upper = &report.functions[&Which::Upper];
    let lower = &report.functions[&Which::Lower];
    if *upper != upper_expected {
        return Err(format!("Ῡ = {upper}"));
    }
    if *lower != lower_expected {
        return Err(format!("Υ̲ = {lower}"));
    }
    let (u, l) = (upper.eval(r(1, 2)).unwrap(), lower.eval(r(1, 2)).unwrap());
    if (u, l) != (r(-3, 1), r(-4, 1)) {
        return Err(format!("values at 1/2: {u}, {l}"));
    }
    within("T(3,7)", start, GOLDEN_BUDGET)?;
    Ok(format!("Ῡ = {upper}, Υ̲ = {lower}, in {:.2?}", start.elapsed()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let specs = verify::symmetric_specs_by_half(CLOSED_FORM_MAX_HALF);
    let rep = verify::check_closed_form(&specs, false);
    let summary = reports(&[rep])?;
    within("closed-form sweep", start, CLOSED_FORM_BUDGET)?;
    Ok(format!("{summary} (both signs, half sum ≤ {CLOSED_FORM_MAX_HALF}) in {:.2?}", start.elapsed()))
}

/// Essential generators read off the figures: `v₀` plus the tail, in
/// `(grading, (Min, Max))` form.
fn figure_profile(v0: (i64, i64), tail: &[(i64, i64, i64)]) -> Vec<(i64, (i64, i64))> {
    let mut out: Vec<_> = tail.iter().map(|&(g, a, b)| (g, (a, b))).collect();
    out.push((v0.0, (v0.1, v0.1)));
    out.sort_unstable();
    out
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let cases = [
        // T(2,5): v₀ grading 1 at (1,1); tail [1,1] from (0,2) to (1,1)
        ((2, 5, Sign::Positive), figure_profile((1, 1), &[(0, 0, 2), (1, 1, 2), (0, 1, 1)])),
        // T(2,7): v₀ grading 1 at (2,2); tail [1,1] from (0,3)
        ((2, 7, Sign::Positive), figure_profile((1, 2), &[(0, 0, 3), (1, 1, 3), (0, 1, 2)])),
        // −T(2,5): v₀ grading 0 at (−1,−1); tail [1,1] from (−2,0) to (−1,−1), homology in grading 1
        ((2, 5, Sign::Negative), figure_profile((0, -1), &[(1, -2, 0), (0, -2, -1), (1, -1, -1)])),
        // −T(2,7): v₀ grading 0 at (−2,−2); tail [1,1] from (−3,0)
        ((2, 7, Sign::Negative), figure_profile((0, -2), &[(1, -3, 0), (0, -3, -1), (1, -2, -1)])),
    ];
    for ((p, q, sign), expected) in cases {
        let spec = steps_from_torus_knot(p, q).unwrap().with_sign(sign);
        let knot = Knot::from_staircase(&spec);
        let generic = essential_profile(&reduce_bifiltered(&knot.cone().unwrap()).reduced);
        let closed = essential_profile(&materialize_closed_form(&closed_form_cone_reduction(&spec).unwrap()));
        if generic != expected || closed != expected {
            return Err(format!("{sign}T({p},{q}): generic {generic:?}, closed form {closed:?}, figure {expected:?}"));
        }
    }
    within("figures", start, FIGURES_BUDGET)?;
    Ok(format!("T(2,5), T(2,7), −T(2,5), −T(2,7) in {:.2?}", start.elapsed()))
}

fn criterion_4() -> Outcome {
    reports(&[verify::check_towers(35)])
}

fn criterion_5() -> Outcome {
    reports(&[verify::check_ordering(&verify::corpus(), GRID_DENOMINATOR)])
}

fn criterion_6() -> Outcome {
    let corpus = verify::corpus();
    let summary = reports(&[verify::check_v0(&corpus)])?;
    let two = Rational::from_integer(2);
    for (label, knot) in &corpus {
        let (a, b) = v0_invariants(knot).map_err(|e| format!("{label}: {e}"))?;
        let u = upsilon(knot, Which::Upper).unwrap().eval(two).unwrap();
        let l = upsilon(knot, Which::Lower).unwrap().eval(two).unwrap();
        if a != u * r(-1, 2) || b != l * r(-1, 2) {
            return Err(format!("{label}: V₀ = ({a}, {b}) but Upsilon(2) = ({u}, {l})"));
        }
    }
    let t37 = Knot::from_staircase(&steps_from_torus_knot(3, 7).unwrap());
    let v = v0_invariants(&t37).map_err(|e| e.to_string())?;
    if v != (two, two) {
        return Err(format!("T(3,7) V₀ = {v:?}"));
    }
    Ok(format!("{summary}; V̄₀(T(3,7)) = V̲₀(T(3,7)) = 2"))
}

fn criterion_7() -> Outcome {
    reports(&[verify::check_acyclic_summands(&verify::corpus(), BOXES_PER_KNOT, SEED)])
}

fn criterion_8() -> Outcome {
    reports(&[verify::check_slope_bound(&verify::corpus())])
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let all = verify::run_all(&VerifyOptions {
        grid_denominator: GRID_DENOMINATOR,
        seed: SEED,
        ..VerifyOptions::default()
    });
    let wanted = [
        "random complexes: ∂² = 0",
        "reduction: reduced",
        "reduction: pair order",
        "U-window",
        "PL normalization",
    ];
    for w in wanted {
        if !all.iter().any(|r| r.name.starts_with(w)) {
            return Err(format!("suite `{w}` did not run"));
        }
    }
    let summary = reports(&all)?;
    within("full verify", start, VERIFY_BUDGET)?;
    Ok(format!("{} suites, {summary}, full verify in {:.2?}", all.len(), start.elapsed()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("T(3,7) golden values", criterion_1),
        ("closed form = generic reduction, four cases", criterion_2),
        ("figure reproduction", criterion_3),
        ("tower structure, pq ≤ 35", criterion_4),
        ("Υ̲ ≤ Υᶠ ≤ Ῡ on the 1/12 grid", criterion_5),
        ("V₀ = −½·Upsilon(2), integral", criterion_6),
        ("acyclic-summand invariance", criterion_7),
        ("slope bound", criterion_8),
        ("property suites", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
