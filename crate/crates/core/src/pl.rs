//! Exact piecewise-linear functions on `[0, 2]`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// `t ↦ intercept + slope·t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    pub intercept: Rational,
    pub slope: Rational,
}

impl Line {
    pub fn new(intercept: impl Into<Rational>, slope: impl Into<Rational>) -> Self {
        Line {
            intercept: intercept.into(),
            slope: slope.into(),
        }
    }

    pub fn eval(&self, t: Rational) -> Rational {
        self.intercept + self.slope * t
    }

    /// Parameter at which two non-parallel lines meet.
    pub fn crossing(&self, other: &Line) -> Option<Rational> {
        if self.slope == other.slope {
            None
        } else {
            Some((other.intercept - self.intercept) / (self.slope - other.slope))
        }
    }
}

pub fn t_min() -> Rational {
    Rational::zero()
}

pub fn t_max() -> Rational {
    Rational::from_integer(2)
}

pub(crate) fn check_t(t: Rational) -> Result<()> {
    if t < t_min() || t > t_max() {
        Err(Error::TOutOfRange(t))
    } else {
        Ok(())
    }
}

/// `0`, `2`, and every pairwise crossing of `lines` inside `(0, 2)`, sorted
/// and deduplicated. Any function that, between consecutive crossings, is
/// one of the lines is linear between consecutive returned parameters.
pub fn crossings(lines: &[Line]) -> Vec<Rational> {
    let mut distinct = lines.to_vec();
    distinct.sort();
    distinct.dedup();
    let mut ts = vec![t_min(), t_max()];
    for (i, a) in distinct.iter().enumerate() {
        for b in &distinct[i + 1..] {
            if let Some(t) = a.crossing(b) {
                if t > t_min() && t < t_max() {
                    ts.push(t);
                }
            }
        }
    }
    ts.sort();
    ts.dedup();
    ts
}

/// One linear piece `value = intercept + slope·t` on `[start, end]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub start: Rational,
    pub end: Rational,
    pub slope: Rational,
    pub intercept: Rational,
}

/// Continuous piecewise-linear function on `[0, 2]`, stored as its
/// breakpoints. Construction normalizes away collinear interior points, so
/// two equal functions have identical breakpoint lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlFunction {
    points: Vec<(Rational, Rational)>,
}

impl PlFunction {
    /// Validates and normalizes a breakpoint list.
    pub fn new(points: Vec<(Rational, Rational)>) -> Result<Self> {
        let first = points.first().map(|p| p.0);
        let last = points.last().map(|p| p.0);
        if first != Some(t_min()) || last != Some(t_max()) {
            return Err(Error::InvalidPl("breakpoints must start at 0 and end at 2".into()));
        }
        if points.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidPl("t must be strictly increasing".into()));
        }
        Ok(PlFunction { points }.normalized())
    }

    pub fn constant(v: impl Into<Rational>) -> Self {
        let v = v.into();
        PlFunction {
            points: vec![(t_min(), v), (t_max(), v)],
        }
    }

    pub fn from_line(l: Line) -> Self {
        PlFunction::new(vec![(t_min(), l.eval(t_min())), (t_max(), l.eval(t_max()))])
            .expect("two endpoints")
    }

    /// Samples `f` at sorted parameters `ts` (which must include 0 and 2) and
    /// joins the samples linearly.
    pub fn interpolate(ts: &[Rational], mut f: impl FnMut(Rational) -> Rational) -> Self {
        PlFunction::new(ts.iter().map(|&t| (t, f(t))).collect()).expect("valid sample grid")
    }

    pub fn points(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    pub fn breakpoints(&self) -> impl Iterator<Item = Rational> + '_ {
        self.points.iter().map(|p| p.0)
    }

    /// Removes interior points lying on the segment through their
    /// neighbours.
    pub fn normalized(&self) -> Self {
        let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(self.points.len());
        for &p in &self.points {
            while out.len() >= 2 {
                let (a, b) = (out[out.len() - 2], out[out.len() - 1]);
                if (b.1 - a.1) * (p.0 - b.0) == (p.1 - b.1) * (b.0 - a.0) {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(p);
        }
        PlFunction { points: out }
    }

    pub fn segments(&self) -> Vec<Segment> {
        self.points
            .windows(2)
            .map(|w| {
                let ((t0, v0), (t1, v1)) = (w[0], w[1]);
                let slope = (v1 - v0) / (t1 - t0);
                Segment {
                    start: t0,
                    end: t1,
                    slope,
                    intercept: v0 - slope * t0,
                }
            })
            .collect()
    }

    pub fn slopes(&self) -> Vec<Rational> {
        self.segments().iter().map(|s| s.slope).collect()
    }

    pub fn eval(&self, t: Rational) -> Result<Rational> {
        check_t(t)?;
        let i = self.points.partition_point(|p| p.0 < t);
        if self.points[i].0 == t {
            return Ok(self.points[i].1);
        }
        let ((t0, v0), (t1, v1)) = (self.points[i - 1], self.points[i]);
        Ok(v0 + (v1 - v0) * (t - t0) / (t1 - t0))
    }

    pub fn scale(&self, r: Rational) -> Self {
        PlFunction {
            points: self.points.iter().map(|&(t, v)| (t, v * r)).collect(),
        }
        .normalized()
    }

    fn combine(&self, other: &PlFunction, pick: impl Fn(Rational, Rational) -> Rational) -> Self {
        let mut ts: Vec<Rational> = self.breakpoints().chain(other.breakpoints()).collect();
        ts.sort();
        ts.dedup();
        let diff = |t| self.eval(t).unwrap() - other.eval(t).unwrap();
        let mut all = Vec::with_capacity(ts.len() * 2);
        for w in ts.windows(2) {
            all.push(w[0]);
            let (d0, d1) = (diff(w[0]), diff(w[1]));
            if (d0.is_positive() && d1.is_negative()) || (d0.is_negative() && d1.is_positive()) {
                all.push(w[0] + (w[1] - w[0]) * d0 / (d0 - d1));
            }
        }
        all.push(t_max());
        PlFunction::interpolate(&all, |t| pick(self.eval(t).unwrap(), other.eval(t).unwrap()))
    }

    pub fn max(&self, other: &PlFunction) -> Self {
        self.combine(other, |a, b| a.max(b))
    }

    pub fn min(&self, other: &PlFunction) -> Self {
        self.combine(other, |a, b| a.min(b))
    }

    /// Pointwise minimum of a nonempty set of lines (a concave function).
    pub fn lower_envelope(lines: &[Line]) -> Self {
        assert!(!lines.is_empty(), "envelope of no lines");
        PlFunction::interpolate(&crossings(lines), |t| {
            lines.iter().map(|l| l.eval(t)).min().expect("nonempty")
        })
    }

    /// `t,value` header then one `p/q,p/q` row per breakpoint.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("t,value\n");
        for &(t, v) in &self.points {
            s.push_str(&format!("{}/{},{}/{}\n", t.numer(), t.denom(), v.numer(), v.denom()));
        }
        s
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        if lines.next().map(str::trim) != Some("t,value") {
            return Err(Error::Parse("missing `t,value` header".into()));
        }
        let points = lines
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                let (t, v) = l
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("malformed row `{l}`")))?;
                Ok((parse_rational(t)?, parse_rational(v)?))
            })
            .collect::<Result<Vec<_>>>()?;
        PlFunction::new(points)
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("malformed rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `p/q`, or `p` when integral, with a typographic minus sign.
pub fn pretty_rational(r: Rational) -> String {
    let body = if r.is_integer() {
        r.numer().abs().to_string()
    } else {
        format!("{}/{}", r.numer().abs(), r.denom())
    };
    if r.is_negative() {
        format!("\u{2212}{body}")
    } else {
        body
    }
}

/// `−6t`, `−4`, `−3t − 2`, …
fn pretty_affine(slope: Rational, intercept: Rational) -> String {
    let t_term = if slope.is_zero() {
        None
    } else if slope == Rational::one() {
        Some("t".to_string())
    } else if slope == -Rational::one() {
        Some("\u{2212}t".to_string())
    } else {
        Some(format!("{}t", pretty_rational(slope)))
    };
    match (t_term, intercept.is_zero()) {
        (None, _) => pretty_rational(intercept),
        (Some(t), true) => t,
        (Some(t), false) if intercept.is_negative() => {
            format!("{t} \u{2212} {}", pretty_rational(-intercept))
        }
        (Some(t), false) => format!("{t} + {}", pretty_rational(intercept)),
    }
}

impl fmt::Display for PlFunction {
    /// Piecewise formula, e.g. `−6t on [0,2/3]; −4 on [2/3,2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces: Vec<String> = self
            .segments()
            .iter()
            .map(|s| {
                format!(
                    "{} on [{},{}]",
                    pretty_affine(s.slope, s.intercept),
                    pretty_rational(s.start),
                    pretty_rational(s.end)
                )
            })
            .collect();
        f.write_str(&pieces.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    fn ri(p: i64) -> Rational {
        Rational::from_integer(p)
    }

    #[test]
    fn normalization_drops_collinear_points() {
        let f = PlFunction::new(vec![(ri(0), ri(0)), (ri(1), ri(-1)), (ri(2), ri(-2))]).unwrap();
        assert_eq!(f.points().len(), 2);
        assert_eq!(f.normalized(), f);
    }

    #[test]
    fn rejects_bad_domain() {
        assert!(PlFunction::new(vec![(ri(0), ri(0)), (ri(1), ri(0))]).is_err());
        assert!(PlFunction::new(vec![(ri(0), ri(0)), (ri(0), ri(1)), (ri(2), ri(0))]).is_err());
    }

    #[test]
    fn envelope_of_t37_upper_lines() {
        // -6t, -3t - 2, -4
        let lines = [Line::new(0, -6), Line::new(-2, -3), Line::new(-4, 0)];
        let f = PlFunction::lower_envelope(&lines);
        let g = lines
            .iter()
            .fold(None::<PlFunction>, |acc, l| {
                let p = PlFunction::from_line(*l);
                Some(match acc {
                    None => p,
                    Some(a) => a.max(&p),
                })
            })
            .unwrap();
        assert_eq!(g.points(), &[(ri(0), ri(0)), (r(2, 3), ri(-4)), (ri(2), ri(-4))]);
        assert_eq!(g.to_string(), "\u{2212}6t on [0,2/3]; \u{2212}4 on [2/3,2]");
        assert_eq!(f.points(), &[(ri(0), ri(-4)), (r(2, 3), ri(-4)), (ri(2), ri(-12))]);
    }

    #[test]
    fn eval_and_range() {
        let f = PlFunction::new(vec![(ri(0), ri(0)), (ri(1), ri(-1)), (ri(2), ri(0))]).unwrap();
        assert_eq!(f.eval(r(1, 2)).unwrap(), r(-1, 2));
        assert_eq!(f.eval(ri(1)).unwrap(), ri(-1));
        assert!(f.eval(r(5, 2)).is_err());
        assert!(f.eval(r(-1, 3)).is_err());
    }

    #[test]
    fn csv_format() {
        let f = PlFunction::new(vec![(ri(0), ri(0)), (r(2, 3), ri(-4)), (ri(2), ri(-4))]).unwrap();
        let csv = f.to_csv();
        assert_eq!(csv, "t,value\n0/1,0/1\n2/3,-4/1\n2/1,-4/1\n");
        assert_eq!(PlFunction::from_csv(&csv).unwrap(), f);
    }

    #[test]
    fn affine_formatting() {
        assert_eq!(pretty_affine(ri(-3), ri(-2)), "\u{2212}3t \u{2212} 2");
        assert_eq!(pretty_affine(ri(1), ri(-2)), "t \u{2212} 2");
        assert_eq!(pretty_affine(ri(0), ri(0)), "0");
        assert_eq!(pretty_affine(r(1, 2), ri(1)), "1/2t + 1");
    }
}
