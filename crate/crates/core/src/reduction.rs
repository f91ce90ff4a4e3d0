//! Bifiltered Gaussian elimination and the closed-form reduction of
//! involutive cones of symmetric staircases.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{BifilteredComplex, Chain, FiltrationMode, Generator};
use crate::error::Result;
use crate::f2::F2Vec;
use crate::staircase::{classify, Parity, Sign, StaircaseSpec};

/// Output of [`reduce_bifiltered`].
#[derive(Clone, Debug)]
pub struct ReductionResult {
    pub reduced: BifilteredComplex,
    /// Image of each original generator under the projection onto the
    /// reduced complex (a filtered chain map inducing an isomorphism on
    /// homology).
    pub kept_of: BTreeMap<String, Chain>,
    /// Cancelled `(source, target)` pairs in elimination order.
    pub eliminated_pairs: Vec<(String, String)>,
}

/// How the next equal-bidegree arrow to cancel is picked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairOrder {
    /// Smallest `(grading, bidegree, source id, target id)` first.
    Deterministic,
    /// Uniformly random among the candidates, from a seeded generator.
    Seeded(u64),
}

/// Cancels every arrow between generators of equal bidegree until none is
/// left.
pub fn reduce_bifiltered(c: &BifilteredComplex) -> ReductionResult {
    reduce_bifiltered_with(c, PairOrder::Deterministic)
}

pub fn reduce_bifiltered_with(c: &BifilteredComplex, order: PairOrder) -> ReductionResult {
    let n = c.len();
    let mut cols: Vec<F2Vec> = (0..n).map(|x| c.column(x).clone()).collect();
    let mut alive = vec![true; n];
    let mut images: Vec<F2Vec> = (0..n).map(|g| F2Vec::from_indices(n, [g])).collect();
    let mut eliminated = Vec::new();
    let mut rng = match order {
        PairOrder::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        PairOrder::Deterministic => None,
    };

    loop {
        let mut candidates: Vec<(usize, usize)> = (0..n)
            .filter(|&x| alive[x])
            .flat_map(|x| {
                cols[x]
                    .ones()
                    .filter(move |&y| c.gen(x).bidegree() == c.gen(y).bidegree())
                    .map(move |y| (x, y))
            })
            .collect();
        if candidates.is_empty() {
            break;
        }
        let (x, y) = match rng.as_mut() {
            Some(rng) => *candidates.choose(rng).expect("nonempty"),
            None => {
                candidates.sort_by(|&(x1, y1), &(x2, y2)| {
                    let key = |x: usize, y: usize| {
                        let g = c.gen(x);
                        (g.grading, g.f1, g.f2, g.id.as_str(), c.gen(y).id.as_str())
                    };
                    key(x1, y1).cmp(&key(x2, y2))
                });
                candidates[0]
            }
        };

        // ∂x = y + a
        let x_col = cols[x].clone();
        let mut a = x_col.clone();
        a.toggle(y);
        for z in 0..n {
            if alive[z] && z != x && cols[z].get(y) {
                cols[z].xor_assign(&x_col);
            }
            cols[z].set(x, false);
        }
        for img in images.iter_mut() {
            img.set(x, false);
            if img.get(y) {
                img.toggle(y);
                img.xor_assign(&a);
            }
        }
        alive[x] = false;
        alive[y] = false;
        cols[x] = F2Vec::zeros(n);
        cols[y] = F2Vec::zeros(n);
        eliminated.push((c.gen(x).id.clone(), c.gen(y).id.clone()));
    }

    let keep: Vec<usize> = (0..n).filter(|&i| alive[i]).collect();
    let mut pos = vec![usize::MAX; n];
    for (new, &old) in keep.iter().enumerate() {
        pos[old] = new;
    }
    let generators = keep.iter().map(|&i| c.gen(i).clone()).collect();
    let columns = keep
        .iter()
        .map(|&x| cols[x].ones().map(|y| pos[y]).collect())
        .collect();
    let reduced = BifilteredComplex::from_columns(c.mode(), generators, columns)
        .expect("ids stay unique");
    let kept_of = (0..n)
        .map(|g| {
            let chain = Chain::from_terms(images[g].ones().map(|i| (0, c.gen(i).id.clone())));
            (c.gen(g).id.clone(), chain)
        })
        .collect();
    ReductionResult {
        reduced,
        kept_of,
        eliminated_pairs: eliminated,
    }
}

/// No arrow joins two generators of the same bidegree.
pub fn is_reduced(c: &BifilteredComplex) -> bool {
    c.entries()
        .all(|(x, y)| c.gen(x).bidegree() != c.gen(y).bidegree())
}

/// Connected components whose homology vanishes in every grading.
pub fn acyclic_components(c: &BifilteredComplex) -> Vec<Vec<usize>> {
    c.components()
        .into_iter()
        .filter(|comp| c.restricted(comp).homology_ranks() == [0, 0])
        .collect()
}

/// Drops every acyclic connected component.
pub fn strip_acyclic(c: &BifilteredComplex) -> BifilteredComplex {
    let keep: Vec<usize> = c
        .components()
        .into_iter()
        .filter(|comp| c.restricted(comp).homology_ranks() != [0, 0])
        .flatten()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    c.restricted(&keep)
}

/// Sorted multiset of `(grading, bidegree)` over the generators of the
/// non-acyclic components.
pub fn essential_profile(c: &BifilteredComplex) -> Vec<(i64, (i64, i64))> {
    let mut out: Vec<_> = strip_acyclic(c)
        .generators()
        .iter()
        .map(|g| (g.grading, g.bidegree()))
        .collect();
    out.sort_unstable();
    out
}

/// Reduced involutive cone of a symmetric staircase, described as a diagonal
/// generator plus a shorter staircase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormOutput {
    pub v0_bidegree: (i64, i64),
    pub v0_grading: i64,
    pub tail_steps: Vec<u32>,
    /// `(Min, Max)` of the tail's first generator.
    pub tail_start: (i64, i64),
    pub tail_homology_grading: i64,
    /// Positive tails start with a step to the right, negative ones downward.
    pub tail_sign: Sign,
}

pub fn closed_form_cone_reduction(spec: &StaircaseSpec) -> Result<ClosedFormOutput> {
    let class = classify(spec)?;
    let (k, s, d) = (class.k, class.s, class.d);
    let tail_len = match class.k_parity {
        Parity::Even => k,
        Parity::Odd => k - 1,
    };
    let tail_steps = spec.steps()[..tail_len].to_vec();
    Ok(match class.sign {
        Sign::Positive => ClosedFormOutput {
            v0_bidegree: (d, d),
            v0_grading: 1,
            tail_steps,
            tail_start: (0, s),
            tail_homology_grading: 0,
            tail_sign: Sign::Positive,
        },
        Sign::Negative => ClosedFormOutput {
            v0_bidegree: (-d, -d),
            v0_grading: 0,
            tail_steps,
            tail_start: (-s, 0),
            tail_homology_grading: 1,
            tail_sign: Sign::Negative,
        },
    })
}

/// The MIN_MAX complex `tail ⊕ v0` described by a closed-form output. Tail
/// generators are named `s0, s1, …`; the diagonal generator is `v0`.
pub fn materialize_closed_form(out: &ClosedFormOutput) -> BifilteredComplex {
    // positive tail anchored at the origin: corners in grading 0
    let mut pts = vec![(0i64, 0i64)];
    let (mut x, mut y) = (0i64, 0i64);
    for (i, &a) in out.tail_steps.iter().enumerate() {
        if i % 2 == 0 {
            x += a as i64;
        } else {
            y -= a as i64;
        }
        pts.push((x, y));
    }
    let m = pts.len();
    let mut generators = Vec::with_capacity(m + 1);
    let mut columns: Vec<Vec<usize>> = vec![Vec::new(); m + 1];
    for (i, &(px, py)) in pts.iter().enumerate() {
        let connector = i % 2 == 1;
        let (f1, f2, grading) = match out.tail_sign {
            Sign::Positive => (
                out.tail_start.0 + px,
                out.tail_start.1 + py,
                out.tail_homology_grading + connector as i64,
            ),
            // (Min, Max) ↦ (−Max, −Min) of the positive shape, arrows reversed
            Sign::Negative => (
                out.tail_start.0 - py,
                out.tail_start.1 - px,
                out.tail_homology_grading - connector as i64,
            ),
        };
        generators.push(Generator::new(format!("s{i}"), grading, f1, f2));
        if connector {
            for j in [Some(i - 1), (i + 1 < m).then_some(i + 1)].into_iter().flatten() {
                match out.tail_sign {
                    Sign::Positive => columns[i].push(j),
                    Sign::Negative => columns[j].push(i),
                }
            }
        }
    }
    generators.push(Generator::new(
        "v0",
        out.v0_grading,
        out.v0_bidegree.0,
        out.v0_bidegree.1,
    ));
    BifilteredComplex::from_columns(FiltrationMode::MinMax, generators, columns)
        .expect("ids are unique")
}
