//! Cross-checks run by `iupsilon verify` and the acceptance tests.
//!
//! Each check returns a [`CheckReport`] counting the cases it examined and
//! describing every failing case, so callers can print one line per check.

use std::fmt;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{boundary, validate, BifilteredComplex, Chain, FiltrationMode, Generator};
use crate::error::{Error, Result};
use crate::f2::F2Vec;
use crate::involutive::{fold, ChainMap};
use crate::io::{complex_from_json, complex_to_json};
use crate::knot::Knot;
use crate::pl::{Line, PlFunction};
use crate::reduction::{
    closed_form_cone_reduction, essential_profile, is_reduced, materialize_closed_form,
    reduce_bifiltered, reduce_bifiltered_with, PairOrder,
};
use crate::staircase::{classify, staircase_from_steps, steps_from_torus_knot, Pointing, Sign, StaircaseSpec};
use crate::upsilon::{
    nu_function_windowed, nu_function_with, upsilon_of_class, upsilon_with, v0_from, NuEngine,
    UpsilonSettings, Which,
};
use crate::Rational;

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Counts one case and records `detail` if it failed.
    fn case(&mut self, label: impl fmt::Display, outcome: Result<std::result::Result<(), String>>) {
        self.cases += 1;
        match outcome {
            Ok(Ok(())) => {}
            Ok(Err(detail)) => self.failures.push(format!("{label}: {detail}")),
            Err(e) => self.failures.push(format!("{label}: error: {e}")),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} ({} cases)", self.name, self.cases)
        } else {
            write!(
                f,
                "FAIL {} ({} of {} cases failed)",
                self.name,
                self.failures.len(),
                self.cases
            )?;
            for line in self.failures.iter().take(5) {
                write!(f, "\n    {line}")?;
            }
            Ok(())
        }
    }
}

fn expect_eq<T: PartialEq + fmt::Debug>(what: &str, a: &T, b: &T) -> std::result::Result<(), String> {
    if a == b {
        Ok(())
    } else {
        Err(format!("{what}: {a:?} vs {b:?}"))
    }
}

/// All compositions of `m` into positive parts.
fn compositions(m: u32) -> Vec<Vec<u32>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=m {
        for mut rest in compositions(m - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every symmetric even-length staircase whose first half sums to at most
/// `max_half`, in both signs, including the unknot.
pub fn symmetric_specs_by_half(max_half: u32) -> Vec<StaircaseSpec> {
    let mut out = Vec::new();
    for m in 0..=max_half {
        for half in compositions(m) {
            for sign in [Sign::Positive, Sign::Negative] {
                out.push(StaircaseSpec::symmetric_from_half(&half, sign).expect("positive parts"));
            }
        }
    }
    out
}

/// Symmetric staircases with at most `max_total` total step length.
pub fn symmetric_specs(max_total: u32) -> Vec<StaircaseSpec> {
    symmetric_specs_by_half(max_total / 2)
}

/// Coprime `2 ≤ p < q` with `pq ≤ max_pq`.
pub fn torus_knots(max_pq: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for p in 2.. {
        if p * (p + 1) > max_pq {
            break;
        }
        for q in p + 1..=max_pq / p {
            if p.gcd(&q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

/// The knots every whole-corpus property is checked on: the unknot, torus
/// knots with `pq ≤ 35` and their mirrors, and a few non-torus symmetric
/// staircases in both signs.
pub fn corpus() -> Vec<(String, Knot)> {
    let mut out = vec![("unknot".to_string(), Knot::unknot())];
    for (p, q) in torus_knots(35) {
        let spec = steps_from_torus_knot(p, q).expect("valid torus knot");
        out.push((format!("T({p},{q})"), Knot::from_staircase(&spec)));
        out.push((
            format!("−T({p},{q})"),
            Knot::from_staircase(&spec.with_sign(Sign::Negative)),
        ));
    }
    for steps in [vec![2, 1, 1, 2], vec![1, 3, 3, 1], vec![3, 3], vec![2, 2, 1, 1, 2, 2]] {
        for sign in [Sign::Positive, Sign::Negative] {
            let spec = StaircaseSpec::new(steps.clone(), sign).expect("positive steps");
            out.push((spec.to_string(), Knot::from_staircase(&spec)));
        }
    }
    out
}

fn all_upsilons(knot: &Knot, settings: UpsilonSettings) -> Result<Vec<PlFunction>> {
    Which::ALL.iter().map(|&w| upsilon_with(knot, w, settings)).collect()
}

/// Closed form against reduction of the cone: essential multisets and all
/// four Upsilon functions must agree exactly. With `unreduced`, the
/// involutive functions are also recomputed from the unreduced cone.
pub fn check_closed_form(specs: &[StaircaseSpec], unreduced: bool) -> CheckReport {
    let mut report = CheckReport::new(if unreduced {
        "closed form = generic reduction = unreduced cone"
    } else {
        "closed form = generic reduction"
    });
    for spec in specs {
        report.case(spec, (|| {
            let knot = Knot::from_staircase(spec);
            let reduced = reduce_bifiltered(&knot.cone()?).reduced;
            let closed = materialize_closed_form(&closed_form_cone_reduction(spec)?);
            if let Err(e) = expect_eq("essential multiset", &essential_profile(&reduced), &essential_profile(&closed)) {
                return Ok(Err(e));
            }
            let nu = NuEngine::default();
            for (h, w) in [(0, Which::Upper), (1, Which::Lower)] {
                let g = upsilon_of_class(&reduced, h, nu)?;
                let c = upsilon_of_class(&closed, h, nu)?;
                if g != c {
                    return Ok(Err(format!("{w}: generic {g} vs closed form {c}")));
                }
                if unreduced {
                    let u = upsilon_of_class(&knot.cone()?, h, NuEngine::Sweep)?;
                    if u != c {
                        return Ok(Err(format!("{w}: unreduced {u} vs closed form {c}")));
                    }
                }
            }
            // the closed form covers only the cone; the unfolded and folded
            // functions are shared, so compare them across reduction instead
            for w in [Which::Classic, Which::Folded] {
                let a = upsilon_with(&knot, w, UpsilonSettings::default())?;
                let b = upsilon_with(&knot, w, UpsilonSettings { reduce: false, engine: NuEngine::Sweep })?;
                if a != b {
                    return Ok(Err(format!("{w}: reduced {a} vs unreduced {b}")));
                }
            }
            Ok(Ok(()))
        })());
    }
    report
}

/// Upsilon from the reduced cone equals Upsilon from the unreduced one.
/// The unreduced side enumerates when the coset fits under the guard and
/// sweeps otherwise.
pub fn check_fast_path(knots: &[(String, Knot)]) -> CheckReport {
    let mut report = CheckReport::new("reduced = unreduced (fast path)");
    for (label, knot) in knots {
        report.case(label, (|| {
            for w in Which::ALL {
                let fast = upsilon_with(knot, w, UpsilonSettings::default())?;
                let slow = match upsilon_with(knot, w, UpsilonSettings { reduce: false, engine: NuEngine::default() }) {
                    Err(Error::CosetTooLarge { .. }) => {
                        upsilon_with(knot, w, UpsilonSettings { reduce: false, engine: NuEngine::Sweep })?
                    }
                    other => other?,
                };
                if fast != slow {
                    return Ok(Err(format!("{w}: reduced {fast} vs unreduced {slow}")));
                }
            }
            Ok(Ok(()))
        })());
    }
    report
}

/// Cone homology has rank one in gradings 0 and 1, and in every grading
/// `rank H_h(cone) = rank H_h(C) + rank H_{h−1}(C)`.
pub fn check_towers(max_pq: i64) -> CheckReport {
    let mut report = CheckReport::new(format!("tower structure (pq ≤ {max_pq})"));
    let mut knots = Vec::new();
    for (p, q) in torus_knots(max_pq) {
        let spec = steps_from_torus_knot(p, q).expect("valid");
        knots.push((format!("T({p},{q})"), spec.clone()));
        knots.push((format!("−T({p},{q})"), spec.with_sign(Sign::Negative)));
    }
    for (label, spec) in knots {
        report.case(label, (|| {
            let knot = Knot::from_staircase(&spec);
            let folded = fold(&knot.complex)?;
            let cone = knot.cone()?;
            if let Err(e) = expect_eq("cone ranks", &cone.homology_ranks(), &[1, 1]) {
                return Ok(Err(e));
            }
            for h in -3..=3 {
                let lhs = cone.homology_rank(h);
                let rhs = folded.homology_rank(h) + folded.homology_rank(h - 1);
                if lhs != rhs {
                    return Ok(Err(format!("grading {h}: cone rank {lhs}, base ranks sum to {rhs}")));
                }
            }
            Ok(Ok(()))
        })());
    }
    report
}

/// `t = j / denominator` for `j = 0..=2·denominator`.
pub fn grid(denominator: i64) -> Vec<Rational> {
    (0..=2 * denominator).map(|j| Rational::new(j, denominator)).collect()
}

/// `Υ̲_t ≤ Υᶠ_t ≤ Ῡ_t` on the grid.
pub fn check_ordering(knots: &[(String, Knot)], denominator: i64) -> CheckReport {
    let mut report = CheckReport::new(format!("Υ̲ ≤ Υᶠ ≤ Ῡ on the 1/{denominator} grid"));
    for (label, knot) in knots {
        report.case(label, (|| {
            let lower = upsilon_with(knot, Which::Lower, UpsilonSettings::default())?;
            let folded = upsilon_with(knot, Which::Folded, UpsilonSettings::default())?;
            let upper = upsilon_with(knot, Which::Upper, UpsilonSettings::default())?;
            for t in grid(denominator) {
                let (l, f, u) = (lower.eval(t)?, folded.eval(t)?, upper.eval(t)?);
                if !(l <= f && f <= u) {
                    return Ok(Err(format!("t = {t}: {l}, {f}, {u}")));
                }
            }
            Ok(Ok(()))
        })());
    }
    report
}

/// `V̄₀ = −½·Ῡ(2)` and `V̲₀ = −½·Υ̲(2)` are integers.
pub fn check_v0(knots: &[(String, Knot)]) -> CheckReport {
    let mut report = CheckReport::new("V₀ integrality");
    for (label, knot) in knots {
        report.case(label, (|| {
            let upper = upsilon_with(knot, Which::Upper, UpsilonSettings::default())?;
            let lower = upsilon_with(knot, Which::Lower, UpsilonSettings::default())?;
            match v0_from(&upper, &lower) {
                Ok(_) => Ok(Ok(())),
                Err(Error::NonIntegral(x)) => Ok(Err(format!("non-integral value {x}"))),
                Err(e) => Err(e),
            }
        })());
    }
    report
}

/// Slopes of `Ῡ` and `Υ̲` are bounded by the widest `|alg − Alex|`.
pub fn check_slope_bound(knots: &[(String, Knot)]) -> CheckReport {
    let mut report = CheckReport::new("slope bound");
    for (label, knot) in knots {
        report.case(label, (|| {
            for w in [Which::Upper, Which::Lower] {
                let f = upsilon_with(knot, w, UpsilonSettings::default())?;
                if !crate::upsilon::slope_bound_check(&f, &knot.complex) {
                    return Ok(Err(format!("{w} = {f} exceeds width {}", knot.width())));
                }
            }
            Ok(Ok(()))
        })());
    }
    report
}

/// `Υ_t = Υ_{2−t}` for symmetric inputs.
pub fn check_classic_symmetry(knots: &[(String, Knot)], denominator: i64) -> CheckReport {
    let mut report = CheckReport::new("classic Υ_t = Υ_{2−t}");
    for (label, knot) in knots {
        report.case(label, (|| {
            let f = upsilon_with(knot, Which::Classic, UpsilonSettings::default())?;
            for t in grid(denominator) {
                let (a, b) = (f.eval(t)?, f.eval(Rational::from_integer(2) - t)?);
                if a != b {
                    return Ok(Err(format!("t = {t}: {a} vs {b}")));
                }
            }
            Ok(Ok(()))
        })());
    }
    report
}

/// Generators plus `(from, to)` arrows by local index.
type Block = (Vec<Generator>, Vec<(usize, usize)>);

/// A random acyclic summand with an involution: a square box or a single
/// cancelling arrow, either centred on the diagonal with the reflection, or
/// as a mirror-image pair swapped by the involution.
pub fn random_acyclic_summand(rng: &mut impl Rng) -> Knot {
    let g = rng.gen_range(-3..=3);
    let a = rng.gen_range(-4..=4);
    let b = rng.gen_range(-4..=4);
    let square = rng.gen_bool(0.5);
    let paired = a != b && rng.gen_bool(0.5);
    // one block at (a, b): either x → y at equal bidegree, or the box
    // top → left + bottom, left → corner, bottom → corner
    let block = |tag: &str, a: i64, b: i64| -> (Vec<Generator>, Vec<(usize, usize)>) {
        if square {
            (
                vec![
                    Generator::new(format!("{tag}top"), g, a, b),
                    Generator::new(format!("{tag}left"), g - 1, a - 1, b),
                    Generator::new(format!("{tag}bottom"), g - 1, a, b - 1),
                    Generator::new(format!("{tag}corner"), g - 2, a - 1, b - 1),
                ],
                vec![(0, 1), (0, 2), (1, 3), (2, 3)],
            )
        } else {
            (
                vec![
                    Generator::new(format!("{tag}x"), g, a, b),
                    Generator::new(format!("{tag}y"), g - 1, a, b),
                ],
                vec![(0, 1)],
            )
        }
    };
    let build = |blocks: Vec<Block>| {
        let mut gens = Vec::new();
        let mut cols: Vec<Vec<usize>> = Vec::new();
        for (bg, arrows) in blocks {
            let off = gens.len();
            cols.extend(std::iter::repeat_with(Vec::new).take(bg.len()));
            for (x, y) in arrows {
                cols[off + x].push(off + y);
            }
            gens.extend(bg);
        }
        BifilteredComplex::from_columns(FiltrationMode::AlgAlex, gens, cols).expect("distinct ids")
    };
    let (c, involution) = if paired {
        let c = build(vec![block("Z1.", a, b), block("Z2.", b, a)]);
        let m = c.len() / 2;
        // swap the blocks; inside a box the reflection also swaps left and bottom
        let partner = |i: usize| -> usize {
            let (other, local) = if i < m { (m, i) } else { (0, i - m) };
            let local = if square && local == 1 {
                2
            } else if square && local == 2 {
                1
            } else {
                local
            };
            other + local
        };
        let cols = (0..c.len()).map(|i| vec![partner(i)]).collect();
        (c, ChainMap::from_columns(2 * m, cols))
    } else {
        let c = build(vec![block("Z.", a, a)]);
        let cols = if square {
            vec![vec![0], vec![2], vec![1], vec![3]]
        } else {
            vec![vec![0], vec![1]]
        };
        (c, ChainMap::from_columns(if square { 4 } else { 2 }, cols))
    };
    Knot::from_complex(c, Some(involution)).expect("acyclic summand is a valid involutive complex")
}

/// Adding acyclic summands never changes any Upsilon function.
pub fn check_acyclic_summands(knots: &[(String, Knot)], boxes: usize, seed: u64) -> CheckReport {
    let mut report = CheckReport::new(format!("acyclic-summand invariance ({boxes} boxes per knot)"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (label, knot) in knots {
        let base = all_upsilons(knot, UpsilonSettings::default());
        for i in 0..boxes {
            let z = random_acyclic_summand(&mut rng);
            report.case(format!("{label} ⊕ Z{i}"), (|| {
                let base = match &base {
                    Ok(b) => b,
                    Err(e) => return Ok(Err(format!("base failed: {e}"))),
                };
                let z_ranks = fold(&z.complex)?.homology_ranks();
                if z_ranks != [0, 0] {
                    return Ok(Err(format!("summand is not acyclic: {z_ranks:?}")));
                }
                let sum = knot.direct_sum(&z)?;
                let got = all_upsilons(&sum, UpsilonSettings::default())?;
                Ok(expect_eq("Upsilon functions", &got, base))
            })());
        }
    }
    report
}

/// Rewrites the basis by `e_i ← e_i + e_j` in a differential or map given by
/// columns.
fn elementary(cols: &mut [F2Vec], i: usize, j: usize) {
    let cj = cols[j].clone();
    cols[i].xor_assign(&cj);
    for v in cols.iter_mut() {
        if v.get(i) {
            v.toggle(j);
        }
    }
}

/// A random filtered change of basis of a knot complex, applied to both the
/// differential and the involution.
pub fn scramble(knot: &Knot, moves: usize, rng: &mut impl Rng) -> Result<Knot> {
    let c = &knot.complex;
    let n = c.len();
    let mut d: Vec<F2Vec> = (0..n).map(|x| c.column(x).clone()).collect();
    let mut inv: Option<Vec<F2Vec>> = knot
        .involution
        .as_ref()
        .map(|m| (0..n).map(|x| m.column(x).clone()).collect());
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            let (gi, gj) = (c.gen(i), c.gen(j));
            i != j && gi.grading == gj.grading && gj.f1 <= gi.f1 && gj.f2 <= gi.f2
        })
        .collect();
    if !pairs.is_empty() {
        for _ in 0..moves {
            let (i, j) = pairs[rng.gen_range(0..pairs.len())];
            elementary(&mut d, i, j);
            if let Some(m) = inv.as_mut() {
                elementary(m, i, j);
            }
        }
    }
    let cols = |v: &[F2Vec]| v.iter().map(|c| c.ones().collect()).collect::<Vec<Vec<usize>>>();
    let complex = BifilteredComplex::from_columns(c.mode(), c.generators().to_vec(), cols(&d))?;
    let involution = inv.map(|m| ChainMap::from_columns(n, cols(&m)));
    Knot::from_complex(complex, involution)
}

/// Images under the reduction certificate commute with the differentials.
fn certificate_is_chain_map(c: &BifilteredComplex, reduced: &BifilteredComplex, kept_of: &std::collections::BTreeMap<String, Chain>) -> Result<bool> {
    for (x, g) in c.generators().iter().enumerate() {
        let lhs = boundary(reduced, &kept_of[&g.id])?;
        let mut rhs = Chain::zero();
        for y in c.column(x).ones() {
            rhs = rhs.add(&kept_of[&c.gen(y).id]);
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Randomized property suites on scrambled corpus complexes: ∂² = 0 and the
/// other structural rules, basis independence of every invariant,
/// reducedness and rank preservation of reduction, its certificate, and
/// independence from the order in which pairs are cancelled.
pub fn check_random_complexes(knots: &[(String, Knot)], trials: usize, seed: u64) -> Vec<CheckReport> {
    let mut structure = CheckReport::new("random complexes: ∂² = 0, grading, filtration");
    let mut basis = CheckReport::new("random complexes: invariants are basis independent");
    let mut reduction = CheckReport::new("reduction: reduced, ranks kept, certificate is a chain map");
    let mut order = CheckReport::new("reduction: pair order does not matter");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let small: Vec<&(String, Knot)> = knots.iter().filter(|(_, k)| k.complex.len() <= 25).collect();
    for trial in 0..trials {
        let (label, knot) = small[rng.gen_range(0..small.len())];
        let moves = rng.gen_range(1..=20);
        let label = format!("{label} #{trial}");
        let scrambled = match scramble(knot, moves, &mut rng) {
            Ok(k) => k,
            Err(e) => {
                structure.case(&label, Ok(Err(format!("scramble rejected: {e}"))));
                continue;
            }
        };
        let cone = match scrambled.cone() {
            Ok(c) => c,
            Err(e) => {
                structure.case(&label, Ok(Err(format!("cone rejected: {e}"))));
                continue;
            }
        };
        structure.case(&label, (|| {
            for c in [&scrambled.complex, &fold(&scrambled.complex)?, &cone] {
                let r = validate(c);
                if !r.ok {
                    return Ok(Err(r.to_string()));
                }
            }
            Ok(Ok(()))
        })());
        basis.case(&label, (|| {
            let a = all_upsilons(knot, UpsilonSettings::default())?;
            let b = all_upsilons(&scrambled, UpsilonSettings::default())?;
            Ok(expect_eq("Upsilon functions", &b, &a))
        })());
        let seed = rng.gen();
        for (report, is_order) in [(&mut reduction, false), (&mut order, true)] {
            report.case(&label, (|| {
                let r = reduce_bifiltered(&cone);
                if !is_order {
                    if !is_reduced(&r.reduced) {
                        return Ok(Err("output is not reduced".into()));
                    }
                    for h in -2..=2 {
                        if cone.homology_rank(h) != r.reduced.homology_rank(h) {
                            return Ok(Err(format!("rank changed in grading {h}")));
                        }
                    }
                    if !certificate_is_chain_map(&cone, &r.reduced, &r.kept_of)? {
                        return Ok(Err("certificate is not a chain map".into()));
                    }
                    return Ok(Ok(()));
                }
                let s = reduce_bifiltered_with(&cone, PairOrder::Seeded(seed));
                if !is_reduced(&s.reduced) {
                    return Ok(Err("seeded output is not reduced".into()));
                }
                if s.reduced.homology_ranks() != r.reduced.homology_ranks() {
                    return Ok(Err("ranks depend on order".into()));
                }
                for h in [0, 1] {
                    let a = upsilon_of_class(&r.reduced, h, NuEngine::default())?;
                    let b = upsilon_of_class(&s.reduced, h, NuEngine::default())?;
                    if a != b {
                        return Ok(Err(format!("grading {h}: {a} vs {b}")));
                    }
                }
                Ok(Ok(()))
            })());
        }
    }
    vec![structure, basis, reduction, order]
}

/// Widening the U-window by `extra` gradings on each side leaves ν unchanged.
pub fn check_window(knots: &[(String, Knot)], extra: i64) -> CheckReport {
    let mut report = CheckReport::new(format!("U-window widened by ±{extra} leaves ν unchanged"));
    for (label, knot) in knots {
        report.case(label, (|| {
            let mut complexes = vec![(fold(&knot.complex)?, 0)];
            let cone = reduce_bifiltered(&knot.cone()?).reduced;
            complexes.push((cone.clone(), 0));
            complexes.push((cone, 1));
            for (c, h) in complexes {
                let a = nu_function_with(&c, h, NuEngine::Sweep)?;
                let b = nu_function_windowed(&c, h, extra)?;
                if a != b {
                    return Ok(Err(format!("grading {h}: {a} vs {b}")));
                }
            }
            Ok(Ok(()))
        })());
    }
    report
}

/// Coset enumeration and the ordered sweep agree on unreduced cones small
/// enough to enumerate.
pub fn check_nu_engines(knots: &[(String, Knot)]) -> CheckReport {
    let mut report = CheckReport::new("ν: coset enumeration = ordered sweep");
    for (label, knot) in knots {
        report.case(label, (|| {
            let mut complexes = vec![(knot.complex.clone(), 0), (fold(&knot.complex)?, 0)];
            let cone = knot.cone()?;
            complexes.push((cone.clone(), 0));
            complexes.push((cone, 1));
            for (c, h) in complexes {
                let a = match nu_function_with(&c, h, NuEngine::Enumerate { guard: 16 }) {
                    Err(Error::CosetTooLarge { .. }) => {
                        nu_function_with(&reduce_bifiltered(&c).reduced, h, NuEngine::default())?
                    }
                    other => other?,
                };
                let b = nu_function_with(&c, h, NuEngine::Sweep)?;
                if a != b {
                    return Ok(Err(format!("grading {h}: {a} vs {b}")));
                }
            }
            Ok(Ok(()))
        })());
    }
    report
}

fn random_rational(rng: &mut impl Rng) -> Rational {
    let d = rng.gen_range(1..=12);
    Rational::new(rng.gen_range(0..=2 * d), d)
}

/// Normalization removes exactly the collinear points and is a fixpoint.
pub fn check_pl_normalization(trials: usize, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("PL normalization is idempotent");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let envelope = |rng: &mut ChaCha8Rng| {
            let lines: Vec<Line> = (0..rng.gen_range(1..=5))
                .map(|_| Line::new(rng.gen_range(-10..=10), rng.gen_range(-6..=6)))
                .collect();
            PlFunction::lower_envelope(&lines)
        };
        let f = envelope(&mut rng).max(&envelope(&mut rng));
        let mut ts: Vec<Rational> = f.breakpoints().collect();
        ts.extend((0..rng.gen_range(0..6)).map(|_| random_rational(&mut rng)));
        ts.sort();
        ts.dedup();
        report.case(format!("trial {trial}"), (|| {
            let points = ts.iter().map(|&t| Ok((t, f.eval(t)?))).collect::<Result<Vec<_>>>()?;
            let g = PlFunction::new(points)?;
            if g != f {
                return Ok(Err(format!("resampled {g} vs {f}")));
            }
            if f.normalized() != f || f.normalized().normalized() != f.normalized() {
                return Ok(Err(format!("{f} is not a fixpoint")));
            }
            let kept: Vec<Rational> = f.breakpoints().collect();
            for w in f.points().windows(3) {
                let (a, b, c) = (w[0], w[1], w[2]);
                if (b.1 - a.1) * (c.0 - b.0) == (c.1 - b.1) * (b.0 - a.0) {
                    return Ok(Err(format!("collinear breakpoint kept in {kept:?}")));
                }
            }
            Ok(Ok(()))
        })());
    }
    report
}

/// The mod-4 pointing rule agrees with whether the central generator is a
/// cycle.
pub fn check_pointing(max_total: u32) -> CheckReport {
    let mut report = CheckReport::new("pointing rule = central generator is a cycle");
    for spec in symmetric_specs(max_total).into_iter().filter(|s| !s.is_unknot()) {
        report.case(&spec, (|| {
            let class = classify(&spec)?;
            let c = staircase_from_steps(&spec);
            let central = spec.len() / 2;
            let cycle = c.column(central).is_zero();
            let inward = class.pointing == Pointing::Inward;
            Ok(expect_eq("inward vs central cycle", &inward, &cycle))
        })());
    }
    report
}

/// Torus step lists are symmetric and sum to twice the genus.
pub fn check_torus_steps(max_pq: i64) -> CheckReport {
    let mut report = CheckReport::new(format!("torus step lists (pq ≤ {max_pq})"));
    for (p, q) in torus_knots(max_pq) {
        report.case(format!("T({p},{q})"), (|| {
            let spec = steps_from_torus_knot(p, q)?;
            if !spec.is_symmetric() {
                return Ok(Err(format!("{spec} is not symmetric")));
            }
            Ok(expect_eq("Σ steps", &spec.total(), &((p - 1) * (q - 1))))
        })());
    }
    report
}

/// Complex JSON re-parses to the identical complex at every stage.
pub fn check_round_trip(knots: &[(String, Knot)]) -> CheckReport {
    let mut report = CheckReport::new("complex JSON round trip");
    for (label, knot) in knots {
        report.case(label, (|| {
            let cone = knot.cone()?;
            let reduced = reduce_bifiltered(&cone).reduced;
            let stages = [
                (knot.complex.clone(), knot.involution.clone()),
                (fold(&knot.complex)?, knot.involution.clone()),
                (cone, None),
                (reduced, None),
            ];
            for (c, i) in stages {
                let text = complex_to_json(&c, i.as_ref());
                let (c2, i2) = complex_from_json(&text)?;
                if c2 != c || i2 != i || complex_to_json(&c2, i2.as_ref()) != text {
                    return Ok(Err("round trip changed the complex".into()));
                }
            }
            Ok(Ok(()))
        })());
    }
    report
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Largest total step length of the symmetric staircases compared.
    pub max_steps: u32,
    pub grid_denominator: i64,
    pub seed: u64,
    /// Random trials per randomized suite.
    pub trials: usize,
    /// Acyclic summands per corpus knot.
    pub boxes: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_steps: 8,
            grid_denominator: 12,
            seed: 0x1A5C_EE5D,
            trials: 40,
            boxes: 20,
        }
    }
}

/// Every check, in a fixed order.
pub fn run_all(opts: &VerifyOptions) -> Vec<CheckReport> {
    let corpus = corpus();
    let mut out = vec![
        check_closed_form(&symmetric_specs(opts.max_steps), true),
        check_fast_path(&corpus),
        check_nu_engines(&corpus),
        check_towers(35),
        check_torus_steps(60),
        check_pointing(opts.max_steps),
        check_ordering(&corpus, opts.grid_denominator),
        check_classic_symmetry(&corpus, opts.grid_denominator),
        check_v0(&corpus),
        check_slope_bound(&corpus),
        check_acyclic_summands(&corpus, opts.boxes, opts.seed),
        check_window(&corpus, 1),
        check_pl_normalization(opts.trials * 5, opts.seed),
        check_round_trip(&corpus),
    ];
    out.extend(check_random_complexes(&corpus, opts.trials, opts.seed));
    out
}
