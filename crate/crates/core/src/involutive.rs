//! Folding, the staircase involution, and the involutive mapping cone.

use crate::complex::{require_valid, BifilteredComplex, FiltrationMode, Generator};
use crate::error::{Error, Result};
use crate::f2::F2Vec;

/// An F₂-linear self-map of a complex's U⁰ slice; column `x` lists the
/// generators in the image of `x`. Whether it is a chain map, and in which
/// sense it respects the filtrations, is checked against a concrete complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    columns: Vec<F2Vec>,
}

impl ChainMap {
    pub fn identity(n: usize) -> Self {
        ChainMap {
            columns: (0..n).map(|i| F2Vec::from_indices(n, [i])).collect(),
        }
    }

    pub fn from_columns(n: usize, columns: Vec<Vec<usize>>) -> Self {
        assert_eq!(columns.len(), n);
        ChainMap {
            columns: columns
                .into_iter()
                .map(|col| F2Vec::from_indices(n, col))
                .collect(),
        }
    }

    /// Builds a map from `(from, to)` id pairs, each meaning `to` appears in
    /// the image of `from`.
    pub fn from_entries<'a>(
        c: &BifilteredComplex,
        entries: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let n = c.len();
        let mut columns = vec![F2Vec::zeros(n); n];
        for (from, to) in entries {
            let x = c.require(from)?;
            let y = c.require(to)?;
            if columns[x].get(y) {
                return Err(Error::DuplicateEntry {
                    from: from.into(),
                    to: to.into(),
                });
            }
            columns[x].set(y, true);
        }
        Ok(ChainMap { columns })
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, x: usize) -> &F2Vec {
        &self.columns[x]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(x, col)| col.ones().map(move |y| (x, y)))
    }

    pub fn apply(&self, v: &F2Vec) -> F2Vec {
        let mut out = F2Vec::zeros(self.dim());
        for x in v.ones() {
            out.xor_assign(&self.columns[x]);
        }
        out
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &ChainMap) -> ChainMap {
        ChainMap {
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == ChainMap::identity(self.dim())
    }

    /// Block-diagonal sum, matching [`crate::complex::direct_sum`].
    pub fn direct_sum(&self, other: &ChainMap) -> ChainMap {
        let (n, m) = (self.dim(), other.dim());
        let columns = self
            .columns
            .iter()
            .map(|c| c.ones().collect())
            .chain(other.columns.iter().map(|c| c.ones().map(|y| y + n).collect()))
            .collect();
        ChainMap::from_columns(n + m, columns)
    }

    /// Chain-map identity `∂ ∘ M = M ∘ ∂` and grading preservation.
    pub fn check_chain_map(&self, c: &BifilteredComplex) -> Result<()> {
        if self.dim() != c.len() {
            return Err(Error::NotChainMap(format!(
                "map has dimension {}, complex has {} generators",
                self.dim(),
                c.len()
            )));
        }
        for (x, y) in self.entries() {
            if c.gen(x).grading != c.gen(y).grading {
                return Err(Error::NotChainMap(format!(
                    "{} -> {} changes grading",
                    c.gen(x).id,
                    c.gen(y).id
                )));
            }
        }
        for x in 0..c.len() {
            let lhs = {
                let mut v = F2Vec::zeros(c.len());
                for y in self.columns[x].ones() {
                    v.xor_assign(c.column(y));
                }
                v
            };
            let rhs = self.apply(c.column(x));
            if lhs != rhs {
                return Err(Error::NotChainMap(format!(
                    "∂M ≠ M∂ on generator {}",
                    c.gen(x).id
                )));
            }
        }
        Ok(())
    }

    fn check_levels(
        &self,
        c: &BifilteredComplex,
        ok: impl Fn(&Generator, &Generator) -> bool,
    ) -> Result<()> {
        for (x, y) in self.entries() {
            let (gx, gy) = (c.gen(x), c.gen(y));
            if !ok(gx, gy) {
                return Err(Error::NotFiltered(format!(
                    "{} {:?} -> {} {:?}",
                    gx.id,
                    gx.bidegree(),
                    gy.id,
                    gy.bidegree()
                )));
            }
        }
        Ok(())
    }

    /// Every image term has both filtration levels at most those of the source.
    pub fn check_filtered(&self, c: &BifilteredComplex) -> Result<()> {
        self.check_levels(c, |x, y| y.f1 <= x.f1 && y.f2 <= x.f2)
    }

    /// Filtered after swapping the two filtrations of the target.
    pub fn check_skew_filtered(&self, c: &BifilteredComplex) -> Result<()> {
        self.check_levels(c, |x, y| y.f2 <= x.f1 && y.f1 <= x.f2)
    }
}

/// Replaces `(f1, f2)` by `(min, max)`.
pub fn fold(c: &BifilteredComplex) -> Result<BifilteredComplex> {
    if c.mode() != FiltrationMode::AlgAlex {
        return Err(Error::WrongMode {
            expected: FiltrationMode::AlgAlex,
            found: c.mode(),
        });
    }
    Ok(c.rebuild(FiltrationMode::MinMax, |g| {
        (g.f1.min(g.f2), g.f1.max(g.f2))
    }))
}

/// Reflection through the diagonal: each generator goes to the generator of
/// the same grading at the swapped bidegree.
pub fn staircase_involution(c: &BifilteredComplex) -> Result<ChainMap> {
    if c.mode() != FiltrationMode::AlgAlex {
        return Err(Error::WrongMode {
            expected: FiltrationMode::AlgAlex,
            found: c.mode(),
        });
    }
    let mut columns = Vec::with_capacity(c.len());
    for g in c.generators() {
        let mut partners = c.generators().iter().enumerate().filter(|(_, h)| {
            h.grading == g.grading && h.f1 == g.f2 && h.f2 == g.f1
        });
        match (partners.next(), partners.next()) {
            (Some((j, _)), None) => columns.push(vec![j]),
            (None, _) => {
                return Err(Error::NotSymmetric(format!(
                    "{} at {:?} has no mirror partner",
                    g.id,
                    g.bidegree()
                )))
            }
            _ => {
                return Err(Error::NotSymmetric(format!(
                    "{} at {:?} has several mirror partners",
                    g.id,
                    g.bidegree()
                )))
            }
        }
    }
    let map = ChainMap::from_columns(c.len(), columns);
    map.check_chain_map(c)
        .map_err(|e| Error::NotSymmetric(e.to_string()))?;
    Ok(map)
}

/// `Cone(C, 𝓘 + I)` on a folded complex: an `A.` copy of `C` shifted up one
/// grading, a `B.` copy of `C`, and `∂(A.x) = A.∂x + B.(𝓘x + x)`.
pub fn mapping_cone(c: &BifilteredComplex, involution: &ChainMap) -> Result<BifilteredComplex> {
    if c.mode() != FiltrationMode::MinMax {
        return Err(Error::WrongMode {
            expected: FiltrationMode::MinMax,
            found: c.mode(),
        });
    }
    require_valid(c)?;
    involution.check_chain_map(c)?;
    involution.check_filtered(c)?;
    let n = c.len();
    let generators = c
        .generators()
        .iter()
        .map(|g| Generator::new(format!("A.{}", g.id), g.grading + 1, g.f1, g.f2))
        .chain(
            c.generators()
                .iter()
                .map(|g| Generator::new(format!("B.{}", g.id), g.grading, g.f1, g.f2)),
        )
        .collect();
    let mut columns: Vec<Vec<usize>> = Vec::with_capacity(2 * n);
    for x in 0..n {
        let mut to_b = involution.column(x).clone();
        to_b.toggle(x);
        columns.push(
            c.column(x)
                .ones()
                .chain(to_b.ones().map(|y| y + n))
                .collect(),
        );
    }
    for x in 0..n {
        columns.push(c.column(x).ones().map(|y| y + n).collect());
    }
    BifilteredComplex::from_columns(FiltrationMode::MinMax, generators, columns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{homology_basis, validate};
    use crate::staircase::{staircase_from_steps, Sign, StaircaseSpec};

    fn stair(steps: &[u32]) -> BifilteredComplex {
        staircase_from_steps(&StaircaseSpec::new(steps.to_vec(), Sign::Positive).unwrap())
    }

    #[test]
    fn fold_coordinates() {
        let f = fold(&stair(&[1, 2, 1, 2, 2, 1, 2, 1])).unwrap();
        assert_eq!(f.mode(), FiltrationMode::MinMax);
        assert_eq!(f.gen(0).bidegree(), (0, 6));
        assert_eq!(f.gen(8).bidegree(), (0, 6));
        assert_eq!(f.gen(4).bidegree(), (2, 2));
        assert!(validate(&f).ok);
        assert!(matches!(fold(&f), Err(Error::WrongMode { .. })));
    }

    #[test]
    fn fold_lands_above_diagonal() {
        let f = fold(&stair(&[1, 1, 1, 1])).unwrap();
        assert!(f.generators().iter().all(|g| g.f1 <= g.f2));
    }

    #[test]
    fn reflection_on_t37() {
        let c = stair(&[1, 2, 1, 2, 2, 1, 2, 1]);
        let i = staircase_involution(&c).unwrap();
        assert_eq!(i.column(0).ones().collect::<Vec<_>>(), vec![8]);
        assert_eq!(i.column(4).ones().collect::<Vec<_>>(), vec![4]);
        assert!(i.compose(&i).is_identity());
        assert!(i.check_skew_filtered(&c).is_ok());
        assert!(i.check_filtered(&c).is_err());
        let f = fold(&c).unwrap();
        assert!(i.check_filtered(&f).is_ok());
    }

    #[test]
    fn asymmetric_staircase_has_no_reflection() {
        assert!(matches!(
            staircase_involution(&stair(&[1, 2])),
            Err(Error::NotSymmetric(_))
        ));
    }

    #[test]
    fn cone_over_unknot() {
        let u = fold(&BifilteredComplex::unknot()).unwrap();
        let cone = mapping_cone(&u, &ChainMap::identity(1)).unwrap();
        assert_eq!(cone.len(), 2);
        assert_eq!(cone.arrow_count(), 0);
        assert_eq!(cone.gen(0).grading, 1);
        assert_eq!(cone.gen(1).grading, 0);
        assert!(cone.generators().iter().all(|g| g.bidegree() == (0, 0)));
    }

    #[test]
    fn cone_over_t37() {
        let c = stair(&[1, 2, 1, 2, 2, 1, 2, 1]);
        let i = staircase_involution(&c).unwrap();
        let f = fold(&c).unwrap();
        let cone = mapping_cone(&f, &i).unwrap();
        assert_eq!(cone.len(), 18);
        assert!(validate(&cone).ok);
        assert_eq!(homology_basis(&cone, 0).len(), 1);
        assert_eq!(homology_basis(&cone, 1).len(), 1);
        // the central generator is fixed, so A.v4 only maps into the A copy
        let a4 = cone.index_of("A.v4").unwrap();
        assert!(cone.column(a4).ones().all(|y| y < 9));
        assert!(matches!(mapping_cone(&c, &i), Err(Error::WrongMode { .. })));
    }

    #[test]
    fn cone_rejects_unfiltered_map() {
        let c = fold(&stair(&[1, 1])).unwrap();
        // v2 -> v0 keeps grading and bidegree; v0 -> v1 changes grading
        let bad = ChainMap::from_columns(3, vec![vec![1], vec![1], vec![2]]);
        assert!(mapping_cone(&c, &bad).is_err());
    }
}
