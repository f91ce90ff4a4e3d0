//! Complex JSON files.
//!
//! ```json
//! {"mode": "ALG_ALEX",
//!  "generators": [{"id": "a", "gr": 0, "f1": 0, "f2": 1}],
//!  "differential": [{"from": "b", "to": "a"}],
//!  "involution": [{"from": "a", "to": "c"}]}
//! ```
//!
//! A differential entry means `to` appears in `∂(from)`; an involution entry
//! means `to` appears in `𝓘(from)`. The `involution` block is optional and
//! unknown keys are rejected. Output lists generators in complex order and
//! entries by source then target, so emitting and re-reading is lossless.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complex::{BifilteredComplex, FiltrationMode, Generator};
use crate::error::{Error, Result};
use crate::involutive::ChainMap;
use crate::knot::Knot;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    mode: FiltrationMode,
    generators: Vec<GeneratorRecord>,
    differential: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    involution: Option<Vec<Entry>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorRecord {
    id: String,
    gr: i64,
    f1: i64,
    f2: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    from: String,
    to: String,
}

fn entries(c: &BifilteredComplex, pairs: impl Iterator<Item = (usize, usize)>) -> Vec<Entry> {
    pairs
        .map(|(x, y)| Entry {
            from: c.gen(x).id.clone(),
            to: c.gen(y).id.clone(),
        })
        .collect()
}

/// Pretty-printed JSON with a trailing newline.
pub fn complex_to_json(c: &BifilteredComplex, involution: Option<&ChainMap>) -> String {
    let file = ComplexFile {
        mode: c.mode(),
        generators: c
            .generators()
            .iter()
            .map(|g| GeneratorRecord {
                id: g.id.clone(),
                gr: g.grading,
                f1: g.f1,
                f2: g.f2,
            })
            .collect(),
        differential: entries(c, c.entries()),
        involution: involution.map(|i| entries(c, i.entries())),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("complex serializes");
    s.push('\n');
    s
}

/// Parses a complex and its optional involution. Structural validity is not
/// checked here; see [`crate::complex::validate`].
pub fn complex_from_json(text: &str) -> Result<(BifilteredComplex, Option<ChainMap>)> {
    let file: ComplexFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("complex JSON: {e}")))?;
    let generators = file
        .generators
        .into_iter()
        .map(|g| Generator::new(g.id, g.gr, g.f1, g.f2))
        .collect();
    let c = BifilteredComplex::new(
        file.mode,
        generators,
        file.differential.iter().map(|e| (e.from.as_str(), e.to.as_str())),
    )?;
    let involution = file
        .involution
        .map(|es| ChainMap::from_entries(&c, es.iter().map(|e| (e.from.as_str(), e.to.as_str()))))
        .transpose()?;
    Ok((c, involution))
}

pub fn read_complex_file(path: &Path) -> Result<(BifilteredComplex, Option<ChainMap>)> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    complex_from_json(&text)
}

/// Reads an ALG_ALEX knot complex, checking validity and the involution.
pub fn read_knot_file(path: &Path) -> Result<Knot> {
    let (c, i) = read_complex_file(path)?;
    Knot::from_complex(c, i)
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::staircase::steps_from_torus_knot;

    #[test]
    fn round_trip_with_involution() {
        let k = Knot::from_staircase(&steps_from_torus_knot(3, 7).unwrap());
        let text = complex_to_json(&k.complex, k.involution.as_ref());
        let (c, i) = complex_from_json(&text).unwrap();
        assert_eq!(c, k.complex);
        assert_eq!(i, k.involution);
        assert_eq!(complex_to_json(&c, i.as_ref()), text);
    }

    #[test]
    fn round_trip_cone() {
        let k = Knot::from_staircase(&steps_from_torus_knot(2, 5).unwrap());
        let cone = k.cone().unwrap();
        let text = complex_to_json(&cone, None);
        assert!(!text.contains("involution"));
        assert_eq!(complex_from_json(&text).unwrap().0, cone);
    }

    #[test]
    fn rejects_unknown_keys_and_ids() {
        let extra = r#"{"mode":"ALG_ALEX","generators":[],"differential":[],"colour":1}"#;
        assert!(matches!(complex_from_json(extra), Err(Error::Parse(_))));
        let bad_gen = r#"{"mode":"ALG_ALEX","generators":[{"id":"a","gr":0,"f1":0,"f2":0,"x":1}],"differential":[]}"#;
        assert!(complex_from_json(bad_gen).is_err());
        let unknown = r#"{"mode":"MIN_MAX","generators":[{"id":"a","gr":0,"f1":0,"f2":0}],"differential":[{"from":"a","to":"b"}]}"#;
        assert!(matches!(complex_from_json(unknown), Err(Error::UnknownGenerator(_))));
        let mode = r#"{"mode":"OTHER","generators":[],"differential":[]}"#;
        assert!(complex_from_json(mode).is_err());
    }

    #[test]
    fn knot_file_must_be_unfolded() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("u.json");
        let folded = crate::involutive::fold(&BifilteredComplex::unknot()).unwrap();
        write_file(&path, &complex_to_json(&folded, None)).unwrap();
        assert!(matches!(read_knot_file(&path), Err(Error::WrongMode { .. })));
        let missing = dir.path().join("nope.json");
        assert_eq!(read_knot_file(&missing).unwrap_err().exit_code(), 5);
    }
}
