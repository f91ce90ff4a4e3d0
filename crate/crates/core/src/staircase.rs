//! Staircase complexes: the knot Floer complexes of L-space knots and their
//! mirrors.
//!
//! A positive staircase with steps `[a₁,…,a_n]` has generators `v0,…,vn`.
//! It starts at `(0, Σ a_even)` and alternates: odd-numbered steps move right
//! (`f1 += a_i`), even-numbered steps move down (`f2 −= a_i`). Even-position
//! generators are corners in grading 0; odd-position generators are
//! connectors in grading 1 with `∂v_{2i+1} = v_{2i} + v_{2i+2}`. A symmetric
//! staircase of `2k` steps therefore runs from `(0, s)` to `(s, 0)` with
//! `s = a₁ + … + a_k`. Negative staircases are mirrors of positive ones.

use std::fmt;

use num_integer::Integer;

use crate::complex::{BifilteredComplex, FiltrationMode, Generator};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// Step lengths and sign of a staircase. Construct with [`StaircaseSpec::new`]
/// (nonempty, positive steps) or [`StaircaseSpec::unknot`] (no steps).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StaircaseSpec {
    steps: Vec<u32>,
    sign: Sign,
}

impl StaircaseSpec {
    pub fn new(steps: Vec<u32>, sign: Sign) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InvalidSteps("step list is empty".into()));
        }
        if let Some(i) = steps.iter().position(|&a| a == 0) {
            return Err(Error::InvalidSteps(format!(
                "step {} is zero; steps must be positive",
                i + 1
            )));
        }
        Ok(StaircaseSpec { steps, sign })
    }

    /// The single-generator staircase.
    pub fn unknot() -> Self {
        StaircaseSpec {
            steps: Vec::new(),
            sign: Sign::Positive,
        }
    }

    pub fn steps(&self) -> &[u32] {
        &self.steps
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn with_sign(&self, sign: Sign) -> Self {
        StaircaseSpec {
            steps: self.steps.clone(),
            sign,
        }
    }

    /// Number of steps (edges).
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_unknot(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        self.steps.iter().eq(self.steps.iter().rev())
    }

    pub fn total(&self) -> i64 {
        self.steps.iter().map(|&a| a as i64).sum()
    }

    /// Symmetric staircase `[a₁,…,a_k,a_k,…,a₁]` from its first half.
    pub fn symmetric_from_half(half: &[u32], sign: Sign) -> Result<Self> {
        if half.is_empty() {
            return Ok(Self::unknot().with_sign(sign));
        }
        let steps = half.iter().chain(half.iter().rev()).copied().collect();
        Self::new(steps, sign)
    }
}

impl fmt::Display for StaircaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let steps: Vec<String> = self.steps.iter().map(u32::to_string).collect();
        write!(f, "{}[{}]", self.sign, steps.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pointing {
    Inward,
    Outward,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StaircaseClass {
    pub symmetric: bool,
    pub sign: Sign,
    pub pointing: Pointing,
    /// Half-length `k = n / 2`.
    pub k: usize,
    pub k_parity: Parity,
    /// `a₁ + … + a_k`
    pub s: i64,
    /// Sum of `a_i` over odd `i ≤ k`.
    pub d: i64,
}

/// Builds the staircase complex in ALG_ALEX mode with ids `v0,…,vn`.
pub fn staircase_from_steps(spec: &StaircaseSpec) -> BifilteredComplex {
    let positive = positive_staircase(spec.steps());
    match spec.sign {
        Sign::Positive => positive,
        Sign::Negative => mirror(&positive).expect("positive staircase is unfolded"),
    }
}

fn positive_staircase(steps: &[u32]) -> BifilteredComplex {
    let down: i64 = steps.iter().skip(1).step_by(2).map(|&a| a as i64).sum();
    let (mut x, mut y) = (0i64, down);
    let mut generators = vec![Generator::new("v0", 0, x, y)];
    for (i, &a) in steps.iter().enumerate() {
        if i % 2 == 0 {
            x += a as i64;
        } else {
            y -= a as i64;
        }
        let pos = i + 1;
        generators.push(Generator::new(format!("v{pos}"), (pos % 2) as i64, x, y));
    }
    let n = generators.len();
    let columns = (0..n)
        .map(|i| {
            if i % 2 == 1 {
                [Some(i - 1), (i + 1 < n).then_some(i + 1)]
                    .into_iter()
                    .flatten()
                    .collect()
            } else {
                Vec::new()
            }
        })
        .collect();
    BifilteredComplex::from_columns(FiltrationMode::AlgAlex, generators, columns)
        .expect("staircase ids are unique")
}

/// Negates gradings and both filtration levels and reverses every arrow.
pub fn mirror(c: &BifilteredComplex) -> Result<BifilteredComplex> {
    if c.mode() != FiltrationMode::AlgAlex {
        return Err(Error::WrongMode {
            expected: FiltrationMode::AlgAlex,
            found: c.mode(),
        });
    }
    let generators = c
        .generators()
        .iter()
        .map(|g| Generator::new(g.id.clone(), -g.grading, -g.f1, -g.f2))
        .collect();
    let mut columns = vec![Vec::new(); c.len()];
    for (x, y) in c.entries() {
        columns[y].push(x);
    }
    BifilteredComplex::from_columns(FiltrationMode::AlgAlex, generators, columns)
}

/// Step lengths of the positive torus knot `T(p, q)`, read off as gaps
/// between consecutive exponents of its Alexander polynomial
/// `(t^{pq} − 1)(t − 1) / ((t^p − 1)(t^q − 1))`.
pub fn steps_from_torus_knot(p: i64, q: i64) -> Result<StaircaseSpec> {
    let invalid = |reason: &str| Error::InvalidTorusKnot {
        p,
        q,
        reason: reason.to_string(),
    };
    if p < 2 || q <= p {
        return Err(invalid("need 2 <= p < q"));
    }
    if p.gcd(&q) != 1 {
        return Err(invalid("p and q must be coprime"));
    }
    let (pu, qu) = (p as usize, q as usize);
    // (t^{pq} - 1)(t - 1) = t^{pq+1} - t^{pq} - t + 1
    let mut num = vec![0i64; pu * qu + 2];
    num[pu * qu + 1] = 1;
    num[pu * qu] -= 1;
    num[1] -= 1;
    num[0] += 1;
    let alex = divide_exact(&divide_exact(&num, &t_power_minus_one(pu)), &t_power_minus_one(qu));
    let exponents: Vec<i64> = (0..alex.len())
        .rev()
        .filter(|&e| alex[e] != 0)
        .map(|e| e as i64)
        .collect();
    let steps = exponents
        .windows(2)
        .map(|w| (w[0] - w[1]) as u32)
        .collect();
    StaircaseSpec::new(steps, Sign::Positive)
}

fn t_power_minus_one(n: usize) -> Vec<i64> {
    let mut v = vec![0; n + 1];
    v[0] = -1;
    v[n] = 1;
    v
}

/// Exact quotient of integer polynomials (coefficients low to high) by a
/// monic divisor.
fn divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    let mut rem = num.to_vec();
    while rem.len() > 1 && rem.last() == Some(&0) {
        rem.pop();
    }
    if rem.len() <= dd {
        return vec![0];
    }
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &b) in den.iter().enumerate() {
            rem[i + j] -= c * b;
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "division is not exact");
    quot
}

/// Classifies a symmetric staircase of even length.
pub fn classify(spec: &StaircaseSpec) -> Result<StaircaseClass> {
    if !spec.is_symmetric() {
        return Err(Error::Asymmetric(spec.steps().to_vec()));
    }
    let n = spec.len();
    if n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    let k = n / 2;
    let half = &spec.steps()[..k];
    let s = half.iter().map(|&a| a as i64).sum();
    let d = half.iter().step_by(2).map(|&a| a as i64).sum();
    let inward = match spec.sign() {
        Sign::Positive => n.is_multiple_of(4),
        Sign::Negative => n % 4 == 2,
    };
    Ok(StaircaseClass {
        symmetric: true,
        sign: spec.sign(),
        pointing: if inward {
            Pointing::Inward
        } else {
            Pointing::Outward
        },
        k,
        k_parity: if k.is_multiple_of(2) { Parity::Even } else { Parity::Odd },
        s,
        d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{homology_basis, validate};

    fn spec(steps: &[u32], sign: Sign) -> StaircaseSpec {
        StaircaseSpec::new(steps.to_vec(), sign).unwrap()
    }

    #[test]
    fn t37_staircase_coordinates() {
        let c = staircase_from_steps(&spec(&[1, 2, 1, 2, 2, 1, 2, 1], Sign::Positive));
        assert_eq!(c.len(), 9);
        let coords: Vec<_> = c.generators().iter().map(|g| g.bidegree()).collect();
        assert_eq!(
            coords,
            vec![
                (0, 6),
                (1, 6),
                (1, 4),
                (2, 4),
                (2, 2),
                (4, 2),
                (4, 1),
                (6, 1),
                (6, 0)
            ]
        );
        assert_eq!(c.gen(0).grading, 0);
        assert!(validate(&c).ok);
        assert_eq!(homology_basis(&c, 0).len(), 1);
        assert!(homology_basis(&c, 1).is_empty());
    }

    #[test]
    fn single_step_is_an_arrow() {
        let c = staircase_from_steps(&spec(&[1], Sign::Positive));
        assert_eq!(c.len(), 2);
        assert_eq!(c.arrow_count(), 1);
        assert!(c.has_arrow(1, 0));
        assert!(validate(&c).ok);
    }

    #[test]
    fn rejects_bad_steps() {
        assert!(StaircaseSpec::new(vec![], Sign::Positive).is_err());
        assert!(StaircaseSpec::new(vec![1, 0, 1], Sign::Positive).is_err());
    }

    #[test]
    fn unknot_staircase() {
        let c = staircase_from_steps(&StaircaseSpec::unknot());
        assert_eq!(c.len(), 1);
        assert_eq!(c.gen(0).bidegree(), (0, 0));
    }

    #[test]
    fn torus_steps() {
        assert_eq!(
            steps_from_torus_knot(3, 7).unwrap().steps(),
            &[1, 2, 1, 2, 2, 1, 2, 1]
        );
        assert_eq!(steps_from_torus_knot(2, 5).unwrap().steps(), &[1, 1, 1, 1]);
        assert_eq!(
            steps_from_torus_knot(2, 7).unwrap().steps(),
            &[1, 1, 1, 1, 1, 1]
        );
        assert_eq!(steps_from_torus_knot(2, 3).unwrap().steps(), &[1, 1]);
        assert!(steps_from_torus_knot(2, 4).is_err());
        assert!(steps_from_torus_knot(1, 4).is_err());
        assert!(steps_from_torus_knot(5, 3).is_err());
    }

    #[test]
    fn mirror_t25() {
        let c = staircase_from_steps(&spec(&[1, 1, 1, 1], Sign::Positive));
        let m = mirror(&c).unwrap();
        assert_eq!(mirror(&m).unwrap(), c);
        assert!(validate(&m).ok);
        assert_eq!(m.len(), 5);
        // arrows now leave the corners
        assert!(m.has_arrow(0, 1) && m.has_arrow(2, 1) && m.has_arrow(2, 3));
        assert_eq!(homology_basis(&m, 0).len(), 1);
        assert!(homology_basis(&m, 1).is_empty());
        let folded = crate::involutive::fold(&c).unwrap();
        assert!(mirror(&folded).is_err());
    }

    #[test]
    fn classify_examples() {
        let c = classify(&spec(&[1, 2, 1, 2, 2, 1, 2, 1], Sign::Positive)).unwrap();
        assert_eq!((c.k, c.s, c.d), (4, 6, 2));
        assert_eq!(c.k_parity, Parity::Even);
        assert_eq!(c.pointing, Pointing::Inward);

        let c = classify(&spec(&[1, 1, 1, 1], Sign::Positive)).unwrap();
        assert_eq!((c.k, c.s, c.d, c.pointing), (2, 2, 1, Pointing::Inward));

        let c = classify(&spec(&[1, 1, 1, 1, 1, 1], Sign::Negative)).unwrap();
        assert_eq!((c.k, c.s, c.d, c.pointing), (3, 3, 2, Pointing::Inward));

        let c = classify(&spec(&[1, 1, 1, 1, 1, 1], Sign::Positive)).unwrap();
        assert_eq!(c.pointing, Pointing::Outward);

        assert!(matches!(
            classify(&spec(&[1, 2], Sign::Positive)),
            Err(Error::Asymmetric(_))
        ));
        assert!(matches!(
            classify(&spec(&[1, 2, 1], Sign::Positive)),
            Err(Error::OddLength(3))
        ));
    }

    #[test]
    fn symmetric_from_half_mirrors_steps() {
        let s = StaircaseSpec::symmetric_from_half(&[1, 2], Sign::Negative).unwrap();
        assert_eq!(s.steps(), &[1, 2, 2, 1]);
        assert!(s.is_symmetric());
        assert!(StaircaseSpec::symmetric_from_half(&[], Sign::Positive)
            .unwrap()
            .is_unknot());
    }
}
