//! Finitely generated bifiltered chain complexes over F₂ with an implicit
//! U-action.
//!
//! A [`BifilteredComplex`] stores one representative of each U-orbit of
//! generators (the "U⁰ slice"). The full complex is the span of all U-translates
//! `U^k·g`, where `U` lowers the grading by 2 and both filtration levels by 1.
//! Differentials carry no U-powers, so `∂(U^k·g) = U^k·∂g`.
//!
//! In a fixed grading `h`, a generator `g` contributes exactly one translate
//! (with `k = (gr(g) − h) / 2`) when `gr(g) ≡ h (mod 2)` and none otherwise.
//! [`GradedSlice`] captures that correspondence and is the coordinate system
//! for all homology computations.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2::{self, Echelon, F2Vec};

/// Which pair of filtrations the `(f1, f2)` coordinates of a generator record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FiltrationMode {
    /// `(f1, f2) = (alg, Alex)`.
    #[serde(rename = "ALG_ALEX")]
    AlgAlex,
    /// `(f1, f2) = (Min, Max)` of a folded complex.
    #[serde(rename = "MIN_MAX")]
    MinMax,
}

impl fmt::Display for FiltrationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FiltrationMode::AlgAlex => "ALG_ALEX",
            FiltrationMode::MinMax => "MIN_MAX",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub id: String,
    pub grading: i64,
    pub f1: i64,
    pub f2: i64,
}

impl Generator {
    pub fn new(id: impl Into<String>, grading: i64, f1: i64, f2: i64) -> Self {
        Generator {
            id: id.into(),
            grading,
            f1,
            f2,
        }
    }

    pub fn bidegree(&self) -> (i64, i64) {
        (self.f1, self.f2)
    }
}

/// A finite F₂ combination `Σ U^k·g` of translated generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    terms: BTreeSet<(i64, String)>,
}

impl Chain {
    pub fn zero() -> Self {
        Chain::default()
    }

    pub fn generator(id: impl Into<String>) -> Self {
        let mut c = Chain::zero();
        c.toggle(0, id);
        c
    }

    /// Builds a chain from `(u_power, id)` terms, cancelling repeated terms mod 2.
    pub fn from_terms<S: Into<String>>(terms: impl IntoIterator<Item = (i64, S)>) -> Self {
        let mut c = Chain::zero();
        for (k, id) in terms {
            c.toggle(k, id);
        }
        c
    }

    pub fn toggle(&mut self, u_power: i64, id: impl Into<String>) {
        let key = (u_power, id.into());
        if !self.terms.remove(&key) {
            self.terms.insert(key);
        }
    }

    pub fn add(&self, other: &Chain) -> Chain {
        let terms = self
            .terms
            .symmetric_difference(&other.terms)
            .cloned()
            .collect();
        Chain { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &str)> {
        self.terms.iter().map(|(k, id)| (*k, id.as_str()))
    }

    /// Multiplies by `U^k`.
    pub fn u_shift(&self, k: i64) -> Chain {
        Chain {
            terms: self.terms.iter().map(|(u, id)| (u + k, id.clone())).collect(),
        }
    }

    /// Common grading of all terms, or `None` if the chain is zero or
    /// inhomogeneous.
    pub fn grading(&self, c: &BifilteredComplex) -> Option<i64> {
        let mut out = None;
        for (k, id) in self.terms() {
            let g = c.generator(id)?.grading - 2 * k;
            match out {
                None => out = Some(g),
                Some(h) if h != g => return None,
                _ => {}
            }
        }
        out
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, id)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match k {
                0 => write!(f, "{id}")?,
                1 => write!(f, "U·{id}")?,
                _ => write!(f, "U^{k}·{id}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `∂² = 0`
    BoundarySquared,
    /// every arrow lowers the grading by exactly one
    GradingDrop,
    /// every arrow is non-increasing in both filtration levels
    Filtered,
    /// `f1 ≤ f2` for each generator of a folded complex
    MinMaxOrder,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::BoundarySquared => "d-squared",
            Rule::GradingDrop => "grading-drop",
            Rule::Filtered => "filtered",
            Rule::MinMaxOrder => "min-max-order",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    /// Offending generator id or `from -> to` entry.
    pub location: String,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "[{}] {}: {}", v.rule, v.location, v.message)?;
        }
        Ok(())
    }
}

/// Bifiltered complex over F₂. Column `x` of the differential is the set of
/// generators appearing in `∂x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BifilteredComplex {
    mode: FiltrationMode,
    generators: Vec<Generator>,
    index: HashMap<String, usize>,
    columns: Vec<F2Vec>,
}

impl BifilteredComplex {
    /// Builds a complex from generators and `(from, to)` differential entries,
    /// each meaning `to` appears in `∂(from)`.
    pub fn new<'a>(
        mode: FiltrationMode,
        generators: Vec<Generator>,
        entries: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let mut c = Self::with_generators(mode, generators)?;
        for (from, to) in entries {
            let x = c.require(from)?;
            let y = c.require(to)?;
            if c.columns[x].get(y) {
                return Err(Error::DuplicateEntry {
                    from: from.to_string(),
                    to: to.to_string(),
                });
            }
            c.columns[x].set(y, true);
        }
        Ok(c)
    }

    /// Index-based constructor; `columns[x]` lists the targets of `∂x`.
    pub fn from_columns(
        mode: FiltrationMode,
        generators: Vec<Generator>,
        columns: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let mut c = Self::with_generators(mode, generators)?;
        assert_eq!(columns.len(), c.len(), "one column per generator");
        let n = c.len();
        for (x, col) in columns.into_iter().enumerate() {
            for y in col {
                assert!(y < n, "column entry out of range");
                c.columns[x].toggle(y);
            }
        }
        Ok(c)
    }

    fn with_generators(mode: FiltrationMode, generators: Vec<Generator>) -> Result<Self> {
        let mut index = HashMap::with_capacity(generators.len());
        for (i, g) in generators.iter().enumerate() {
            if index.insert(g.id.clone(), i).is_some() {
                return Err(Error::DuplicateGenerator(g.id.clone()));
            }
        }
        let n = generators.len();
        Ok(BifilteredComplex {
            mode,
            generators,
            index,
            columns: vec![F2Vec::zeros(n); n],
        })
    }

    pub fn empty(mode: FiltrationMode) -> Self {
        Self::with_generators(mode, Vec::new()).expect("empty generator list")
    }

    /// One generator in grading 0 at bidegree (0,0).
    pub fn unknot() -> Self {
        Self::new(
            FiltrationMode::AlgAlex,
            vec![Generator::new("x", 0, 0, 0)],
            [],
        )
        .expect("unknot")
    }

    pub fn mode(&self) -> FiltrationMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn gen(&self, i: usize) -> &Generator {
        &self.generators[i]
    }

    pub fn generator(&self, id: &str) -> Option<&Generator> {
        self.index.get(id).map(|&i| &self.generators[i])
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub(crate) fn require(&self, id: &str) -> Result<usize> {
        self.index_of(id)
            .ok_or_else(|| Error::UnknownGenerator(id.to_string()))
    }

    /// Targets of `∂x` as a bit vector over generator indices.
    pub fn column(&self, x: usize) -> &F2Vec {
        &self.columns[x]
    }

    pub fn has_arrow(&self, from: usize, to: usize) -> bool {
        self.columns[from].get(to)
    }

    /// All `(from, to)` index pairs, ordered by `from` then `to`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(x, col)| col.ones().map(move |y| (x, y)))
    }

    pub fn arrow_count(&self) -> usize {
        self.columns.iter().map(F2Vec::count_ones).sum()
    }

    /// The same complex with a different mode tag and bidegrees.
    pub(crate) fn rebuild(
        &self,
        mode: FiltrationMode,
        mut bidegree: impl FnMut(&Generator) -> (i64, i64),
    ) -> Self {
        let generators = self
            .generators
            .iter()
            .map(|g| {
                let (f1, f2) = bidegree(g);
                Generator { f1, f2, ..g.clone() }
            })
            .collect();
        BifilteredComplex {
            mode,
            generators,
            index: self.index.clone(),
            columns: self.columns.clone(),
        }
    }

    /// Reorders generators so that new position `i` holds old generator
    /// `order[i]`.
    pub fn reordered(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.len());
        let mut inverse = vec![usize::MAX; self.len()];
        for (new, &old) in order.iter().enumerate() {
            inverse[old] = new;
        }
        let generators = order.iter().map(|&i| self.generators[i].clone()).collect();
        let columns = order
            .iter()
            .map(|&old| self.columns[old].ones().map(|y| inverse[y]).collect())
            .collect();
        Self::from_columns(self.mode, generators, columns).expect("ids stay unique")
    }

    /// The subcomplex spanned by `keep` (which must be closed under `∂`).
    pub fn restricted(&self, keep: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.len()];
        for (new, &old) in keep.iter().enumerate() {
            pos[old] = new;
        }
        let generators = keep.iter().map(|&i| self.generators[i].clone()).collect();
        let columns = keep
            .iter()
            .map(|&old| {
                self.columns[old]
                    .ones()
                    .map(|y| {
                        assert!(pos[y] != usize::MAX, "restriction is not a subcomplex");
                        pos[y]
                    })
                    .collect()
            })
            .collect();
        Self::from_columns(self.mode, generators, columns).expect("ids stay unique")
    }

    /// Connected components of the differential graph, each sorted, ordered
    /// by smallest member. Every component spans a direct summand.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (x, y) in self.entries().collect::<Vec<_>>() {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for x in 0..n {
            let r = find(&mut parent, x);
            let s = *slot.entry(r).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[s].push(x);
        }
        groups
    }

    /// Distinct gradings present, sorted.
    pub fn gradings(&self) -> Vec<i64> {
        let set: BTreeSet<i64> = self.generators.iter().map(|g| g.grading).collect();
        set.into_iter().collect()
    }

    /// Homology rank in grading `h` of the U-localized complex.
    pub fn homology_rank(&self, h: i64) -> usize {
        self.homology_data(h).representatives.len()
    }

    /// Homology ranks in gradings 0 and 1; every other grading is a
    /// U-translate of one of these.
    pub fn homology_ranks(&self) -> [usize; 2] {
        [self.homology_rank(0), self.homology_rank(1)]
    }

    pub(crate) fn homology_data(&self, h: i64) -> HomologyData {
        let slice = GradedSlice::new(self, h);
        let below = GradedSlice::new(self, h - 1);
        let above = GradedSlice::new(self, h + 1);
        let cols: Vec<F2Vec> = slice
            .gens
            .iter()
            .map(|&x| below.project(&self.columns[x]))
            .collect();
        let cycles = f2::kernel(&cols, below.len());
        let mut boundaries = Echelon::new(slice.len());
        let mut boundary_basis = Vec::new();
        for &x in &above.gens {
            let b = slice.project(&self.columns[x]);
            if boundaries.insert(&b) {
                boundary_basis.push(b);
            }
        }
        let mut span = boundaries.clone();
        let representatives = cycles.into_iter().filter(|z| span.insert(z)).collect();
        HomologyData {
            slice,
            representatives,
            boundary_basis,
            boundaries,
        }
    }

    /// Whether a homogeneous chain is a boundary.
    pub fn is_boundary(&self, z: &Chain) -> Result<bool> {
        if z.is_zero() {
            return Ok(true);
        }
        let h = z
            .grading(self)
            .ok_or_else(|| Error::Parse(format!("chain `{z}` is not homogeneous")))?;
        let data = self.homology_data(h);
        Ok(data.boundaries.contains(&data.slice.vectorize(self, z)?))
    }

    /// Whether two cycles of the same grading are homologous.
    pub fn homologous(&self, a: &Chain, b: &Chain) -> Result<bool> {
        self.is_boundary(&a.add(b))
    }
}

pub(crate) struct HomologyData {
    pub slice: GradedSlice,
    /// Cycles whose classes form a basis of homology.
    pub representatives: Vec<F2Vec>,
    /// Independent boundaries spanning `im ∂` in this grading.
    pub boundary_basis: Vec<F2Vec>,
    pub boundaries: Echelon,
}

/// The translates of grading `h`: one `U^k·g` for each generator with
/// `gr(g) ≡ h (mod 2)`, where `k = (gr(g) − h) / 2`.
#[derive(Clone, Debug)]
pub struct GradedSlice {
    pub grading: i64,
    /// Generator indices, in complex order.
    pub gens: Vec<usize>,
    /// `u_powers[i]` is the U-exponent of the translate of `gens[i]`.
    pub u_powers: Vec<i64>,
    pos: Vec<Option<usize>>,
}

impl GradedSlice {
    pub fn new(c: &BifilteredComplex, h: i64) -> Self {
        let mut gens = Vec::new();
        let mut u_powers = Vec::new();
        let mut pos = vec![None; c.len()];
        for (i, g) in c.generators.iter().enumerate() {
            if (g.grading - h).rem_euclid(2) == 0 {
                pos[i] = Some(gens.len());
                gens.push(i);
                u_powers.push((g.grading - h) / 2);
            }
        }
        GradedSlice {
            grading: h,
            gens,
            u_powers,
            pos,
        }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn position(&self, generator: usize) -> Option<usize> {
        self.pos[generator]
    }

    /// Restricts a vector over all generators to the ones in this slice.
    pub(crate) fn project(&self, v: &F2Vec) -> F2Vec {
        F2Vec::from_indices(self.len(), v.ones().filter_map(|i| self.pos[i]))
    }

    pub fn to_chain(&self, c: &BifilteredComplex, v: &F2Vec) -> Chain {
        Chain::from_terms(
            v.ones()
                .map(|i| (self.u_powers[i], c.generators[self.gens[i]].id.clone())),
        )
    }

    pub fn vectorize(&self, c: &BifilteredComplex, z: &Chain) -> Result<F2Vec> {
        let mut v = F2Vec::zeros(self.len());
        for (k, id) in z.terms() {
            let x = c.require(id)?;
            match self.pos[x] {
                Some(p) if self.u_powers[p] == k => v.toggle(p),
                _ => {
                    return Err(Error::Parse(format!(
                        "term U^{k}·{id} is not in grading {}",
                        self.grading
                    )))
                }
            }
        }
        Ok(v)
    }
}

/// Checks the structural invariants and reports every violation.
pub fn validate(c: &BifilteredComplex) -> ValidationReport {
    let mut violations = Vec::new();
    let id = |i: usize| c.generators[i].id.as_str();
    if c.mode == FiltrationMode::MinMax {
        for g in &c.generators {
            if g.f1 > g.f2 {
                violations.push(Violation {
                    rule: Rule::MinMaxOrder,
                    location: g.id.clone(),
                    message: format!("Min {} exceeds Max {}", g.f1, g.f2),
                });
            }
        }
    }
    for (x, y) in c.entries() {
        let (gx, gy) = (&c.generators[x], &c.generators[y]);
        let loc = format!("{} -> {}", id(x), id(y));
        if gy.grading != gx.grading - 1 {
            violations.push(Violation {
                rule: Rule::GradingDrop,
                location: loc.clone(),
                message: format!("grading {} -> {}", gx.grading, gy.grading),
            });
        }
        if gy.f1 > gx.f1 || gy.f2 > gx.f2 {
            violations.push(Violation {
                rule: Rule::Filtered,
                location: loc,
                message: format!("bidegree {:?} -> {:?}", gx.bidegree(), gy.bidegree()),
            });
        }
    }
    for x in 0..c.len() {
        let mut dd = F2Vec::zeros(c.len());
        for y in c.columns[x].ones() {
            dd.xor_assign(&c.columns[y]);
        }
        for z in dd.ones() {
            violations.push(Violation {
                rule: Rule::BoundarySquared,
                location: format!("{} -> {}", id(x), id(z)),
                message: "∂²x has this nonzero term".to_string(),
            });
        }
    }
    ValidationReport {
        ok: violations.is_empty(),
        violations,
    }
}

pub(crate) fn require_valid(c: &BifilteredComplex) -> Result<()> {
    let report = validate(c);
    if report.ok {
        Ok(())
    } else {
        Err(Error::Invalid(report))
    }
}

/// Linear, U-equivariant extension of the differential.
pub fn boundary(c: &BifilteredComplex, z: &Chain) -> Result<Chain> {
    let mut out = Chain::zero();
    for (k, id) in z.terms() {
        let x = c.require(id)?;
        for y in c.columns[x].ones() {
            out.toggle(k, c.generators[y].id.clone());
        }
    }
    Ok(out)
}

/// Cycle representatives of a basis of homology in grading `h` of the
/// U-localized complex.
pub fn homology_basis(c: &BifilteredComplex, h: i64) -> Vec<Chain> {
    let data = c.homology_data(h);
    data.representatives
        .iter()
        .map(|v| data.slice.to_chain(c, v))
        .collect()
}

/// Block sum. Ids of the summands are prefixed with `L.` and `R.`.
pub fn direct_sum(a: &BifilteredComplex, b: &BifilteredComplex) -> Result<BifilteredComplex> {
    if a.mode != b.mode {
        return Err(Error::ModeMismatch(a.mode, b.mode));
    }
    let offset = a.len();
    let rename = |prefix: &str, g: &Generator| Generator {
        id: format!("{prefix}{}", g.id),
        ..g.clone()
    };
    let generators = a
        .generators
        .iter()
        .map(|g| rename("L.", g))
        .chain(b.generators.iter().map(|g| rename("R.", g)))
        .collect();
    let columns = a
        .columns
        .iter()
        .map(|col| col.ones().collect())
        .chain(
            b.columns
                .iter()
                .map(|col| col.ones().map(|y| y + offset).collect()),
        )
        .collect();
    BifilteredComplex::from_columns(a.mode, generators, columns)
}

pub fn shift(c: &BifilteredComplex, dgrading: i64, df1: i64, df2: i64) -> BifilteredComplex {
    let mut out = c.rebuild(c.mode, |g| (g.f1 + df1, g.f2 + df2));
    for g in &mut out.generators {
        g.grading += dgrading;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use FiltrationMode::*;

    fn trefoil() -> BifilteredComplex {
        BifilteredComplex::new(
            AlgAlex,
            vec![
                Generator::new("a", 0, 0, 1),
                Generator::new("b", 1, 1, 1),
                Generator::new("c", 0, 1, 0),
            ],
            [("b", "a"), ("b", "c")],
        )
        .unwrap()
    }

    #[test]
    fn unknot_is_valid_with_one_class() {
        let u = BifilteredComplex::unknot();
        assert!(validate(&u).ok);
        assert_eq!(homology_basis(&u, 0), vec![Chain::generator("x")]);
        assert!(homology_basis(&u, 1).is_empty());
        // U-translates: grading -2 class is U·x
        assert_eq!(homology_basis(&u, -2), vec![Chain::from_terms([(1, "x")])]);
    }

    #[test]
    fn grading_drop_violation() {
        let c = BifilteredComplex::new(
            AlgAlex,
            vec![Generator::new("x", 0, 0, 0), Generator::new("y", 0, 0, 0)],
            [("x", "y")],
        )
        .unwrap();
        let r = validate(&c);
        assert!(!r.ok);
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].rule, Rule::GradingDrop);
    }

    #[test]
    fn report_lists_every_violation() {
        // x -> y raises f2 and keeps the grading; z violates Min <= Max
        let c = BifilteredComplex::new(
            MinMax,
            vec![
                Generator::new("x", 0, 0, 0),
                Generator::new("y", 0, 0, 1),
                Generator::new("z", 3, 2, 1),
            ],
            [("x", "y")],
        )
        .unwrap();
        let rules: Vec<Rule> = validate(&c).violations.iter().map(|v| v.rule).collect();
        assert!(rules.contains(&Rule::GradingDrop));
        assert!(rules.contains(&Rule::Filtered));
        assert!(rules.contains(&Rule::MinMaxOrder));
    }

    #[test]
    fn d_squared_violation() {
        let c = BifilteredComplex::new(
            AlgAlex,
            vec![
                Generator::new("x", 2, 0, 0),
                Generator::new("y", 1, 0, 0),
                Generator::new("z", 0, 0, 0),
            ],
            [("x", "y"), ("y", "z")],
        )
        .unwrap();
        let r = validate(&c);
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].rule, Rule::BoundarySquared);
    }

    #[test]
    fn construction_errors() {
        let dup = BifilteredComplex::new(
            AlgAlex,
            vec![Generator::new("x", 0, 0, 0), Generator::new("x", 1, 0, 0)],
            [],
        );
        assert!(matches!(dup, Err(Error::DuplicateGenerator(_))));
        let unknown =
            BifilteredComplex::new(AlgAlex, vec![Generator::new("x", 0, 0, 0)], [("x", "q")]);
        assert!(matches!(unknown, Err(Error::UnknownGenerator(_))));
    }

    #[test]
    fn boundary_of_trefoil_connector() {
        let c = trefoil();
        assert_eq!(boundary(&c, &Chain::zero()).unwrap(), Chain::zero());
        assert_eq!(
            boundary(&c, &Chain::generator("b")).unwrap(),
            Chain::from_terms([(0, "a"), (0, "c")])
        );
        assert_eq!(
            boundary(&c, &Chain::from_terms([(3, "b")])).unwrap(),
            Chain::from_terms([(3, "a"), (3, "c")])
        );
        assert!(matches!(
            boundary(&c, &Chain::generator("nope")),
            Err(Error::UnknownGenerator(_))
        ));
    }

    #[test]
    fn trefoil_homology() {
        let c = trefoil();
        let h0 = homology_basis(&c, 0);
        assert_eq!(h0.len(), 1);
        assert!(homology_basis(&c, 1).is_empty());
        assert!(c.homologous(&Chain::generator("a"), &Chain::generator("c")).unwrap());
        assert!(!c.is_boundary(&Chain::generator("a")).unwrap());
    }

    #[test]
    fn direct_sum_and_identity() {
        let u = BifilteredComplex::unknot();
        let e = BifilteredComplex::empty(AlgAlex);
        let s = direct_sum(&u, &e).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.gen(0).id, "L.x");
        let uu = direct_sum(&u, &u).unwrap();
        assert_eq!(homology_basis(&uu, 0).len(), 2);
        assert!(matches!(
            direct_sum(&u, &BifilteredComplex::empty(MinMax)),
            Err(Error::ModeMismatch(..))
        ));
    }

    #[test]
    fn shift_is_translation() {
        let u = BifilteredComplex::unknot();
        assert_eq!(shift(&u, 0, 0, 0), u);
        let t = shift(&u, -2, -1, -1);
        assert_eq!(t.gen(0), &Generator::new("x", -2, -1, -1));
    }

    #[test]
    fn components_split_blocks() {
        let s = direct_sum(&trefoil(), &BifilteredComplex::unknot()).unwrap();
        assert_eq!(s.components(), vec![vec![0, 1, 2], vec![3]]);
    }

    #[test]
    fn reorder_preserves_structure() {
        let c = trefoil();
        let r = c.reordered(&[2, 0, 1]);
        assert_eq!(r.gen(0).id, "c");
        assert!(r.has_arrow(2, 0) && r.has_arrow(2, 1));
        assert!(validate(&r).ok);
    }
}
