//! Command-line knot specifications.
//!
//! ```text
//! torus:p,q      positive torus knot T(p,q)
//! -torus:p,q     its mirror
//! steps:+:a,...  positive staircase with the given steps
//! steps:-:a,...  negative staircase
//! file:PATH      complex JSON (see crate::io)
//! ```

use std::fmt;
use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::io::read_knot_file;
use crate::knot::Knot;
use crate::staircase::{steps_from_torus_knot, Sign, StaircaseSpec};

/// A parsed knot specification, not yet built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotRecipe {
    Torus { p: i64, q: i64, mirror: bool },
    Steps(StaircaseSpec),
    File(PathBuf),
}

impl KnotRecipe {
    /// The staircase behind this knot, when there is one.
    pub fn staircase(&self) -> Option<StaircaseSpec> {
        match self {
            KnotRecipe::Torus { p, q, mirror } => {
                let spec = steps_from_torus_knot(*p, *q).expect("validated when parsed");
                Some(if *mirror { spec.with_sign(Sign::Negative) } else { spec })
            }
            KnotRecipe::Steps(spec) => Some(spec.clone()),
            KnotRecipe::File(_) => None,
        }
    }

    pub fn build(&self) -> Result<Knot> {
        match self {
            KnotRecipe::File(path) => read_knot_file(path),
            _ => Ok(Knot::from_staircase(&self.staircase().expect("staircase recipe"))),
        }
    }

    /// A file-name friendly form of the spec.
    pub fn slug(&self) -> String {
        match self {
            KnotRecipe::Torus { p, q, mirror } => {
                format!("{}T{p}_{q}", if *mirror { "m" } else { "" })
            }
            KnotRecipe::Steps(spec) => {
                let steps: Vec<String> = spec.steps().iter().map(u32::to_string).collect();
                let sign = match spec.sign() {
                    Sign::Positive => "pos",
                    Sign::Negative => "neg",
                };
                if steps.is_empty() {
                    format!("steps_{sign}_unknot")
                } else {
                    format!("steps_{sign}_{}", steps.join("-"))
                }
            }
            KnotRecipe::File(path) => {
                let stem = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| "complex".into());
                stem.chars()
                    .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
                    .collect()
            }
        }
    }
}

impl fmt::Display for KnotRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotRecipe::Torus { p, q, mirror } => {
                write!(f, "{}T({p},{q})", if *mirror { "−" } else { "" })
            }
            KnotRecipe::Steps(spec) => write!(f, "{spec}"),
            KnotRecipe::File(path) => write!(f, "{}", path.display()),
        }
    }
}

fn err(text: &str, pos: usize, what: &str) -> Error {
    Error::Parse(format!(
        "invalid knot spec `{text}` at position {pos}: {what}\n  {text}\n  {}^",
        " ".repeat(pos)
    ))
}

/// Parses comma-separated integers starting at byte offset `start` of `text`.
fn integers(text: &str, start: usize) -> Result<Vec<(i64, usize)>> {
    let body = &text[start..];
    if body.is_empty() {
        return Err(err(text, start, "expected a comma-separated list of integers"));
    }
    let mut out = Vec::new();
    let mut offset = start;
    for part in body.split(',') {
        let value = part
            .parse::<i64>()
            .map_err(|_| err(text, offset, &format!("`{part}` is not an integer")))?;
        out.push((value, offset));
        offset += part.len() + 1;
    }
    Ok(out)
}

pub fn parse_knot_spec(text: &str) -> Result<KnotRecipe> {
    if let Some(path) = text.strip_prefix("file:") {
        if path.is_empty() {
            return Err(err(text, 5, "expected a path"));
        }
        return Ok(KnotRecipe::File(PathBuf::from(path)));
    }
    let (mirror, rest, offset) = match text.strip_prefix('-') {
        Some(r) => (true, r, 1),
        None => (false, text, 0),
    };
    if rest.starts_with("torus:") {
        let start = offset + 6;
        let nums = integers(text, start)?;
        if nums.len() != 2 {
            return Err(err(text, start, "expected exactly two parameters p,q"));
        }
        let ((p, pp), (q, qp)) = (nums[0], nums[1]);
        for (v, at) in [(p, pp), (q, qp)] {
            if v < 2 {
                return Err(err(text, at, "torus parameters must be at least 2"));
            }
        }
        if p == q {
            return Err(err(text, qp, "p and q must differ"));
        }
        let (p, q) = (p.min(q), p.max(q));
        steps_from_torus_knot(p, q).map_err(|e| err(text, start, &e.to_string()))?;
        return Ok(KnotRecipe::Torus { p, q, mirror });
    }
    if mirror {
        return Err(err(text, 1, "only torus specs take a leading `-`"));
    }
    if let Some(body) = text.strip_prefix("steps:") {
        let sign = match body.chars().next() {
            Some('+') => Sign::Positive,
            Some('-') => Sign::Negative,
            _ => return Err(err(text, 6, "expected `+` or `-`")),
        };
        if body.as_bytes().get(1) != Some(&b':') {
            return Err(err(text, 7, "expected `:` after the sign"));
        }
        let start = 8;
        if text.len() == start {
            return Ok(KnotRecipe::Steps(StaircaseSpec::unknot().with_sign(sign)));
        }
        let mut steps = Vec::new();
        for (v, at) in integers(text, start)? {
            if v < 1 || v > u32::MAX as i64 {
                return Err(err(text, at, "steps must be positive integers"));
            }
            steps.push(v as u32);
        }
        return Ok(KnotRecipe::Steps(
            StaircaseSpec::new(steps, sign).map_err(|e| err(text, start, &e.to_string()))?,
        ));
    }
    Err(err(text, 0, "expected `torus:`, `-torus:`, `steps:` or `file:`"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_specs() {
        let r = parse_knot_spec("torus:3,7").unwrap();
        assert_eq!(r.staircase().unwrap().steps(), &[1, 2, 1, 2, 2, 1, 2, 1]);
        assert_eq!(r.staircase().unwrap().sign(), Sign::Positive);
        let m = parse_knot_spec("-torus:2,5").unwrap();
        let s = m.staircase().unwrap();
        assert_eq!((s.steps(), s.sign()), (&[1u32, 1, 1, 1][..], Sign::Negative));
        assert_eq!(parse_knot_spec("torus:7,3").unwrap(), r);
        assert_eq!(m.slug(), "mT2_5");
        assert_eq!(m.to_string(), "−T(2,5)");
    }

    #[test]
    fn torus_errors() {
        for bad in ["torus:2,4", "torus:1,3", "torus:3", "torus:3,x", "torus:", "torus:3,3"] {
            let e = parse_knot_spec(bad).unwrap_err();
            assert!(matches!(e, Error::Parse(_)), "{bad}");
            assert_eq!(e.exit_code(), 2);
        }
        let msg = parse_knot_spec("torus:3,x").unwrap_err().to_string();
        assert!(msg.contains("position 8"), "{msg}");
        assert!(parse_knot_spec("torus:2,4").unwrap_err().to_string().contains("coprime"));
    }

    #[test]
    fn step_specs() {
        let r = parse_knot_spec("steps:+:1,1,1,1").unwrap();
        assert_eq!(r.staircase().unwrap(), StaircaseSpec::new(vec![1, 1, 1, 1], Sign::Positive).unwrap());
        assert_eq!(r.slug(), "steps_pos_1-1-1-1");
        let n = parse_knot_spec("steps:-:2,1,1,2").unwrap();
        assert_eq!(n.staircase().unwrap().sign(), Sign::Negative);
        assert!(parse_knot_spec("steps:+:").unwrap().staircase().unwrap().is_unknot());
        for bad in ["steps:1,1", "steps:+1,1", "steps:+:1,0", "steps:+:1,,1", "steps:*:1", "-steps:+:1"] {
            assert!(matches!(parse_knot_spec(bad), Err(Error::Parse(_))), "{bad}");
        }
        let msg = parse_knot_spec("steps:+:1,0").unwrap_err().to_string();
        assert!(msg.contains("position 10"), "{msg}");
    }

    #[test]
    fn other_specs() {
        assert_eq!(
            parse_knot_spec("file:a/b.json").unwrap(),
            KnotRecipe::File(PathBuf::from("a/b.json"))
        );
        assert!(parse_knot_spec("file:").is_err());
        assert!(parse_knot_spec("knot:3_1").is_err());
    }
}
