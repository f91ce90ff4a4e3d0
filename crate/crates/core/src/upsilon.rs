//! deg_t, the ν functions of tower classes, and the Upsilon invariants.
//!
//! Everything is computed in Upsilon units: a translate `U^k·g` contributes
//! the line `ℓ(t) = −2·deg_t(U^k·g)`, a representative `z` gives the concave
//! function `min_{supp z} ℓ`, and Upsilon is the maximum of these over all
//! representatives of the tower class.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::complex::{require_valid, BifilteredComplex, Chain, FiltrationMode, GradedSlice, Generator};
use crate::error::{Error, Result};
use crate::f2::{Echelon, F2Vec};
use crate::involutive::fold;
use crate::knot::Knot;
use crate::pl::{check_t, crossings, Line, PlFunction};
use crate::reduction::reduce_bifiltered;
use crate::Rational;

/// Largest boundary-space dimension the coset enumeration accepts.
pub const COSET_GUARD: usize = 24;

fn half(t: Rational) -> Rational {
    t / Rational::from_integer(2)
}

fn deg_unchecked(g: &Generator, u_power: i64, t: Rational) -> Rational {
    let h = half(t);
    h * Rational::from_integer(g.f2 - u_power)
        + (Rational::from_integer(1) - h) * Rational::from_integer(g.f1 - u_power)
}

/// `deg_t(U^k·g) = (t/2)·Max + (1 − t/2)·Min − k` for a folded generator.
pub fn deg_t(g: &Generator, u_power: i64, t: Rational, mode: FiltrationMode) -> Result<Rational> {
    if mode != FiltrationMode::MinMax {
        return Err(Error::WrongMode {
            expected: FiltrationMode::MinMax,
            found: mode,
        });
    }
    check_t(t)?;
    Ok(deg_unchecked(g, u_power, t))
}

/// The same formula read on an unfolded generator, with `t/2` weighting
/// the Alexander level.
pub fn deg_t_alg_alex(g: &Generator, u_power: i64, t: Rational) -> Result<Rational> {
    check_t(t)?;
    Ok(deg_unchecked(g, u_power, t))
}

/// Maximum of `deg_t` over the support; `None` for the zero chain.
pub fn chain_deg_t(c: &BifilteredComplex, z: &Chain, t: Rational) -> Result<Option<Rational>> {
    check_t(t)?;
    let mut best: Option<Rational> = None;
    for (k, id) in z.terms() {
        let g = c.generator(id).ok_or_else(|| Error::UnknownGenerator(id.into()))?;
        let d = deg_unchecked(g, k, t);
        best = Some(best.map_or(d, |b| b.max(d)));
    }
    Ok(best)
}

/// `−2·deg_t(U^k·g)` as a line in `t`.
pub fn upsilon_line(g: &Generator, u_power: i64) -> Line {
    Line::new(-2 * (g.f1 - u_power), -(g.f2 - g.f1))
}

/// A cycle for the tower class in one grading, and a basis of the
/// boundaries it may be modified by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerClassWitness {
    pub grading: i64,
    pub base_cycle: Chain,
    pub boundary_space_basis: Vec<Chain>,
}

pub fn tower_witness(c: &BifilteredComplex, grading: i64) -> Result<TowerClassWitness> {
    let w = Window::new(c, grading, 0)?;
    Ok(TowerClassWitness {
        grading,
        base_cycle: w.to_chain(c, &w.base),
        boundary_space_basis: w.boundaries.iter().map(|b| w.to_chain(c, b)).collect(),
    })
}

/// The representatives of a rank-one class inside a band of U-translates.
struct Window {
    coords: Vec<(usize, i64)>,
    base: F2Vec,
    boundaries: Vec<F2Vec>,
}

impl Window {
    /// Translates in gradings `grading ± extra`, with the boundaries of
    /// every translate one grading above those.
    fn new(c: &BifilteredComplex, grading: i64, extra: i64) -> Result<Self> {
        require_valid(c)?;
        let data = c.homology_data(grading);
        if data.representatives.len() != 1 {
            return Err(Error::RankNotOne {
                grading,
                rank: data.representatives.len(),
            });
        }
        if extra == 0 {
            let slice = &data.slice;
            return Ok(Window {
                coords: slice.gens.iter().copied().zip(slice.u_powers.iter().copied()).collect(),
                base: data.representatives[0].clone(),
                boundaries: data.boundary_basis,
            });
        }
        let mut coords = Vec::new();
        let mut offset = 0;
        let mut base = None;
        for h in grading - extra..=grading + extra {
            let s = GradedSlice::new(c, h);
            if h == grading {
                base = Some((offset, data.representatives[0].clone()));
            }
            offset += s.len();
            coords.extend(s.gens.iter().copied().zip(s.u_powers.iter().copied()));
        }
        let width = coords.len();
        let lookup: std::collections::HashMap<(usize, i64), usize> =
            coords.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let (off, rep) = base.expect("grading lies in its own window");
        let base = F2Vec::from_indices(width, rep.ones().map(|i| i + off));
        let mut ech = Echelon::new(width);
        let mut boundaries = Vec::new();
        for h in grading - extra + 1..=grading + extra + 1 {
            let s = GradedSlice::new(c, h);
            for (&x, &k) in s.gens.iter().zip(&s.u_powers) {
                let b = F2Vec::from_indices(
                    width,
                    c.column(x).ones().map(|y| {
                        // ∂ carries no U-powers, so U^k·x maps to U^k·y
                        lookup[&(y, k)]
                    }),
                );
                if ech.insert(&b) {
                    boundaries.push(b);
                }
            }
        }
        Ok(Window {
            coords,
            base,
            boundaries,
        })
    }

    fn to_chain(&self, c: &BifilteredComplex, v: &F2Vec) -> Chain {
        Chain::from_terms(v.ones().map(|i| {
            let (x, k) = self.coords[i];
            (k, c.gen(x).id.clone())
        }))
    }

    fn lines(&self, c: &BifilteredComplex) -> Vec<Line> {
        self.coords
            .iter()
            .map(|&(x, k)| upsilon_line(c.gen(x), k))
            .collect()
    }

    /// Exact value at one `t`: order the coordinates by line value, most
    /// significant (smallest) first, and reduce the base cycle against the
    /// boundaries. The leading term of the residual is the best achievable.
    fn upsilon_at(&self, lines: &[Line], t: Rational) -> Rational {
        let mut order: Vec<usize> = (0..lines.len()).collect();
        order.sort_by(|&a, &b| lines[a].eval(t).cmp(&lines[b].eval(t)).then(a.cmp(&b)));
        let mut rank_of = vec![0; order.len()];
        for (r, &i) in order.iter().enumerate() {
            rank_of[i] = r;
        }
        let mut ech = Echelon::new(lines.len());
        for b in &self.boundaries {
            ech.insert(&b.permuted(&rank_of));
        }
        let residual = ech.reduce(&self.base.permuted(&rank_of));
        let lead = residual.first_one().expect("a nonzero class is not a boundary");
        lines[order[lead]].eval(t)
    }

    fn upsilon_sweep(&self, c: &BifilteredComplex) -> PlFunction {
        let lines = self.lines(c);
        PlFunction::interpolate(&crossings(&lines), |t| self.upsilon_at(&lines, t))
    }

    /// Enumerates all `2^b` representatives and takes the upper envelope of
    /// their concave functions.
    fn upsilon_enumerated(&self, c: &BifilteredComplex, guard: usize) -> Result<PlFunction> {
        let b = self.boundaries.len();
        if b > guard {
            return Err(Error::CosetTooLarge { dim: b, guard });
        }
        let lines = self.lines(c);
        let mut seen: BTreeSet<Vec<Line>> = BTreeSet::new();
        let mut z = self.base.clone();
        let mut best: Option<PlFunction> = None;
        for step in 0u64..(1u64 << b) {
            if step > 0 {
                // Gray code: flip the boundary at the lowest set bit
                z.xor_assign(&self.boundaries[step.trailing_zeros() as usize]);
            }
            let mut support: Vec<Line> = z.ones().map(|i| lines[i]).collect();
            support.sort();
            support.dedup();
            if !seen.insert(support.clone()) {
                continue;
            }
            let f = PlFunction::lower_envelope(&support);
            best = Some(match best {
                Some(g) => g.max(&f),
                None => f,
            });
        }
        Ok(best.expect("the base cycle is a representative"))
    }
}

/// How the minimum over representatives is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NuEngine {
    /// Every element of the coset, refused above `guard` dimensions.
    Enumerate { guard: usize },
    /// Reduction against the boundaries in deg_t order at every candidate
    /// breakpoint; polynomial in the coset dimension.
    Sweep,
}

impl Default for NuEngine {
    fn default() -> Self {
        NuEngine::Enumerate { guard: COSET_GUARD }
    }
}

/// `ν_t` of the tower class in `grading`, using the default engine.
pub fn nu_function(c: &BifilteredComplex, grading: i64) -> Result<PlFunction> {
    nu_function_with(c, grading, NuEngine::default())
}

pub fn nu_function_with(c: &BifilteredComplex, grading: i64, engine: NuEngine) -> Result<PlFunction> {
    Ok(upsilon_of_class(c, grading, engine)?.scale(Rational::new(-1, 2)))
}

/// `ν` computed over a window widened by `extra` gradings on each side.
pub fn nu_function_windowed(c: &BifilteredComplex, grading: i64, extra: i64) -> Result<PlFunction> {
    let w = Window::new(c, grading, extra)?;
    Ok(w.upsilon_sweep(c).scale(Rational::new(-1, 2)))
}

/// Exact `ν` at a single `t`.
pub fn nu_at(c: &BifilteredComplex, grading: i64, t: Rational) -> Result<Rational> {
    check_t(t)?;
    let w = Window::new(c, grading, 0)?;
    Ok(w.upsilon_at(&w.lines(c), t) * Rational::new(-1, 2))
}

/// `−2·ν` of the tower class in `grading`.
pub fn upsilon_of_class(c: &BifilteredComplex, grading: i64, engine: NuEngine) -> Result<PlFunction> {
    let w = Window::new(c, grading, 0)?;
    match engine {
        NuEngine::Enumerate { guard } => w.upsilon_enumerated(c, guard),
        NuEngine::Sweep => Ok(w.upsilon_sweep(c)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Which {
    Classic,
    Folded,
    Upper,
    Lower,
}

impl Which {
    pub const ALL: [Which; 4] = [Which::Classic, Which::Folded, Which::Upper, Which::Lower];

    pub fn name(self) -> &'static str {
        match self {
            Which::Classic => "classic",
            Which::Folded => "folded",
            Which::Upper => "upper",
            Which::Lower => "lower",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Which::Classic => "Υ",
            Which::Folded => "Υᶠ",
            Which::Upper => "Ῡ",
            Which::Lower => "Υ̲",
        }
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UpsilonSettings {
    /// Run bifiltered reduction before looking for representatives.
    pub reduce: bool,
    pub engine: NuEngine,
}

impl Default for UpsilonSettings {
    fn default() -> Self {
        UpsilonSettings {
            reduce: true,
            engine: NuEngine::default(),
        }
    }
}

/// The complex and grading whose tower class defines `which`.
pub fn defining_complex(knot: &Knot, which: Which) -> Result<(BifilteredComplex, i64)> {
    Ok(match which {
        Which::Classic => (knot.complex.clone(), 0),
        Which::Folded => (fold(&knot.complex)?, 0),
        Which::Upper => (knot.cone()?, 0),
        Which::Lower => (knot.cone()?, 1),
    })
}

pub fn upsilon(knot: &Knot, which: Which) -> Result<PlFunction> {
    upsilon_with(knot, which, UpsilonSettings::default())
}

pub fn upsilon_with(knot: &Knot, which: Which, settings: UpsilonSettings) -> Result<PlFunction> {
    let (c, grading) = defining_complex(knot, which)?;
    let c = if settings.reduce {
        reduce_bifiltered(&c).reduced
    } else {
        c
    };
    upsilon_of_class(&c, grading, settings.engine)
}

/// `(V̄₀, V̲₀) = (−½·Ῡ(2), −½·Υ̲(2))`.
pub fn v0_invariants(knot: &Knot) -> Result<(Rational, Rational)> {
    v0_from(&upsilon(knot, Which::Upper)?, &upsilon(knot, Which::Lower)?)
}

pub fn v0_from(upper: &PlFunction, lower: &PlFunction) -> Result<(Rational, Rational)> {
    let two = Rational::from_integer(2);
    let v = |f: &PlFunction| -> Result<Rational> {
        let x = f.eval(two)? * Rational::new(-1, 2);
        if x.is_integer() {
            Ok(x)
        } else {
            Err(Error::NonIntegral(x))
        }
    };
    Ok((v(upper)?, v(lower)?))
}

/// Every slope of `f` is bounded in absolute value by the widest
/// `|f1 − f2|` among the generators of `c`.
pub fn slope_bound_check(f: &PlFunction, c: &BifilteredComplex) -> bool {
    let w = c
        .generators()
        .iter()
        .map(|g| (g.f1 - g.f2).abs())
        .max()
        .unwrap_or(0);
    let w = Rational::from_integer(w);
    f.slopes().iter().all(|s| {
        let a = if *s < Rational::zero() { -*s } else { *s };
        a <= w
    })
}
