//! Batch pipeline behind the `compute` and `dump-complex` commands.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::complex::BifilteredComplex;
use crate::error::{Error, Result};
use crate::involutive::fold;
use crate::io::{complex_to_json, write_file};
use crate::knot::Knot;
use crate::knotspec::{parse_knot_spec, KnotRecipe};
use crate::pl::{pretty_rational, PlFunction};
use crate::reduction::{
    closed_form_cone_reduction, essential_profile, materialize_closed_form, reduce_bifiltered,
    strip_acyclic,
};
use crate::staircase::StaircaseSpec;
use crate::svg;
use crate::upsilon::{upsilon_of_class, upsilon_with, v0_from, NuEngine, UpsilonSettings, Which};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Invariant {
    Upsilon(Which),
    V0,
}

impl Invariant {
    pub const ALL: [Invariant; 5] = [
        Invariant::Upsilon(Which::Classic),
        Invariant::Upsilon(Which::Folded),
        Invariant::Upsilon(Which::Upper),
        Invariant::Upsilon(Which::Lower),
        Invariant::V0,
    ];
}

impl FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "classic" => Invariant::Upsilon(Which::Classic),
            "folded" => Invariant::Upsilon(Which::Folded),
            "upper" => Invariant::Upsilon(Which::Upper),
            "lower" => Invariant::Upsilon(Which::Lower),
            "v0" => Invariant::V0,
            _ => {
                return Err(Error::Parse(format!(
                    "unknown invariant `{s}` (expected classic, folded, upper, lower or v0)"
                )))
            }
        })
    }
}

/// Parses a comma-separated invariant list; `all` expands to every one.
pub fn parse_invariants(list: &str) -> Result<Vec<Invariant>> {
    let mut out = Vec::new();
    for part in list.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let items = if part == "all" {
            Invariant::ALL.to_vec()
        } else {
            vec![part.parse()?]
        };
        for i in items {
            if !out.contains(&i) {
                out.push(i);
            }
        }
    }
    if out.is_empty() {
        return Err(Error::Parse("no invariants requested".into()));
    }
    Ok(out)
}

/// Which pipeline produces the involutive invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    /// Reduce the mapping cone.
    Generic,
    /// Materialize the four-case closed form (symmetric staircases only).
    ClosedForm,
    /// Run both and fail on any disagreement.
    Both,
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "generic" => Ok(Engine::Generic),
            "closed-form" => Ok(Engine::ClosedForm),
            "both" => Ok(Engine::Both),
            _ => Err(Error::Parse(format!(
                "unknown engine `{s}` (expected generic, closed-form or both)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Csv,
    Svg,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            "svg" => Ok(OutputFormat::Svg),
            _ => Err(Error::Parse(format!(
                "unknown output `{s}` (expected table, csv or svg)"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct JobSpec {
    pub knots: Vec<String>,
    pub invariants: Vec<Invariant>,
    pub engine: Engine,
    pub output: OutputFormat,
    pub output_dir: PathBuf,
    /// Drop acyclic components of the reduced cone before evaluating.
    pub strip_acyclic: bool,
    pub nu_engine: NuEngine,
}

impl JobSpec {
    pub fn new(knots: Vec<String>, invariants: Vec<Invariant>) -> Self {
        JobSpec {
            knots,
            invariants,
            engine: Engine::Generic,
            output: OutputFormat::Table,
            output_dir: PathBuf::from("."),
            strip_acyclic: false,
            nu_engine: NuEngine::default(),
        }
    }
}

/// Computed invariants of one knot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotReport {
    pub spec: String,
    pub label: String,
    pub slug: String,
    pub functions: BTreeMap<Which, PlFunction>,
    pub v0: Option<(Rational, Rational)>,
}

fn closed_form_spec(recipe: &KnotRecipe) -> Result<StaircaseSpec> {
    recipe.staircase().ok_or_else(|| {
        Error::Unsupported(format!(
            "the closed-form engine needs a staircase knot, got `{recipe}`"
        ))
    })
}

/// The involutive cone after reduction, as used by the generic engine.
pub fn reduced_cone(knot: &Knot, strip: bool) -> Result<BifilteredComplex> {
    let reduced = reduce_bifiltered(&knot.cone()?).reduced;
    Ok(if strip { strip_acyclic(&reduced) } else { reduced })
}

fn involutive_pair(cone: &BifilteredComplex, nu: NuEngine) -> Result<(PlFunction, PlFunction)> {
    Ok((upsilon_of_class(cone, 0, nu)?, upsilon_of_class(cone, 1, nu)?))
}

fn mismatch(label: &str, what: &str, generic: &dyn std::fmt::Display, closed: &dyn std::fmt::Display) -> Error {
    Error::EngineMismatch(format!(
        "{label}: {what} differs\n  generic:     {generic}\n  closed-form: {closed}"
    ))
}

/// Evaluates the requested invariants of one knot.
pub fn evaluate(
    spec_text: &str,
    invariants: &[Invariant],
    engine: Engine,
    strip: bool,
    nu: NuEngine,
) -> Result<KnotReport> {
    let recipe = parse_knot_spec(spec_text)?;
    let knot = recipe.build()?;
    let label = recipe.to_string();
    let wants = |w: Which| invariants.contains(&Invariant::Upsilon(w));
    let need_involutive =
        invariants.contains(&Invariant::V0) || wants(Which::Upper) || wants(Which::Lower);

    let mut functions = BTreeMap::new();
    let settings = UpsilonSettings { reduce: true, engine: nu };
    for w in [Which::Classic, Which::Folded] {
        if wants(w) {
            functions.insert(w, upsilon_with(&knot, w, settings)?);
        }
    }
    let mut v0 = None;
    if need_involutive {
        let generic = match engine {
            Engine::Generic | Engine::Both => {
                let cone = reduced_cone(&knot, strip)?;
                Some((involutive_pair(&cone, nu)?, essential_profile(&cone)))
            }
            Engine::ClosedForm => None,
        };
        let closed = match engine {
            Engine::ClosedForm | Engine::Both => {
                let cf = materialize_closed_form(&closed_form_cone_reduction(&closed_form_spec(&recipe)?)?);
                Some((involutive_pair(&cf, nu)?, essential_profile(&cf)))
            }
            Engine::Generic => None,
        };
        if let (Some((g, gp)), Some((c, cp))) = (&generic, &closed) {
            if g.0 != c.0 {
                return Err(mismatch(&label, "Ῡ", &g.0, &c.0));
            }
            if g.1 != c.1 {
                return Err(mismatch(&label, "Υ̲", &g.1, &c.1));
            }
            if gp != cp {
                return Err(mismatch(
                    &label,
                    "essential (grading, bidegree) multiset",
                    &format!("{gp:?}"),
                    &format!("{cp:?}"),
                ));
            }
        }
        let ((upper, lower), _) = generic.or(closed).expect("some engine ran");
        if invariants.contains(&Invariant::V0) {
            v0 = Some(v0_from(&upper, &lower)?);
        }
        if wants(Which::Upper) {
            functions.insert(Which::Upper, upper);
        }
        if wants(Which::Lower) {
            functions.insert(Which::Lower, lower);
        }
    }
    Ok(KnotReport {
        spec: spec_text.to_string(),
        label,
        slug: recipe.slug(),
        functions,
        v0,
    })
}

fn ordered<'a>(report: &'a KnotReport, invariants: &[Invariant]) -> Vec<(Which, &'a PlFunction)> {
    invariants
        .iter()
        .filter_map(|i| match i {
            Invariant::Upsilon(w) => report.functions.get(w).map(|f| (*w, f)),
            Invariant::V0 => None,
        })
        .collect()
}

/// Human-readable block for one knot.
pub fn format_table(report: &KnotReport, invariants: &[Invariant]) -> String {
    let mut s = format!("{} ({})\n", report.label, report.spec);
    for i in invariants {
        match i {
            Invariant::Upsilon(w) => {
                let _ = writeln!(s, "  {}: {}", w.symbol(), report.functions[w]);
            }
            Invariant::V0 => {
                let (a, b) = report.v0.expect("v0 computed");
                let _ = writeln!(s, "  V̄₀ = {}, V̲₀ = {}", pretty_rational(a), pretty_rational(b));
            }
        }
    }
    s
}

fn v0_csv(v: (Rational, Rational)) -> String {
    format!(
        "invariant,value\nV0_upper,{}/{}\nV0_lower,{}/{}\n",
        v.0.numer(),
        v.0.denom(),
        v.1.numer(),
        v.1.denom()
    )
}

/// Emitted file contents for one knot, keyed by file name.
pub fn files_for(report: &KnotReport, invariants: &[Invariant], format: OutputFormat) -> Vec<(String, String)> {
    match format {
        OutputFormat::Table => Vec::new(),
        OutputFormat::Csv => {
            let mut files: Vec<(String, String)> = ordered(report, invariants)
                .into_iter()
                .map(|(w, f)| (format!("{}_{}.csv", report.slug, w.name()), f.to_csv()))
                .collect();
            if let Some(v) = report.v0 {
                files.push((format!("{}_v0.csv", report.slug), v0_csv(v)));
            }
            files
        }
        OutputFormat::Svg => {
            let series: Vec<(String, PlFunction)> = ordered(report, invariants)
                .into_iter()
                .map(|(w, f)| (w.symbol().to_string(), f.clone()))
                .collect();
            let mut title = report.label.clone();
            if let Some((a, b)) = report.v0 {
                let _ = write!(title, "   V̄₀ = {}, V̲₀ = {}", pretty_rational(a), pretty_rational(b));
            }
            vec![(format!("{}.svg", report.slug), svg::plot(&title, &series))]
        }
    }
}

/// Runs a job. Returns the text for stdout and the paths written; files
/// are only written once every knot has been evaluated.
pub fn run(job: &JobSpec) -> Result<(String, Vec<PathBuf>)> {
    if job.knots.is_empty() {
        return Err(Error::Parse("no knots given".into()));
    }
    if job.invariants.is_empty() {
        return Err(Error::Parse("no invariants requested".into()));
    }
    let reports = job
        .knots
        .iter()
        .map(|k| evaluate(k, &job.invariants, job.engine, job.strip_acyclic, job.nu_engine))
        .collect::<Result<Vec<_>>>()?;
    let mut stdout = String::new();
    let mut written = Vec::new();
    for r in &reports {
        match job.output {
            OutputFormat::Table => stdout.push_str(&format_table(r, &job.invariants)),
            format => {
                std::fs::create_dir_all(&job.output_dir).map_err(|source| Error::Io {
                    path: job.output_dir.display().to_string(),
                    source,
                })?;
                for (name, contents) in files_for(r, &job.invariants, format) {
                    let path = job.output_dir.join(name);
                    write_file(&path, &contents)?;
                    let _ = writeln!(stdout, "wrote {}", path.display());
                    written.push(path);
                }
            }
        }
    }
    Ok((stdout, written))
}

/// Stages of the pipeline that `dump-complex` can print.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Base,
    Folded,
    Cone,
    Reduced,
    ClosedForm,
}

impl FromStr for Stage {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "base" => Ok(Stage::Base),
            "folded" => Ok(Stage::Folded),
            "cone" => Ok(Stage::Cone),
            "reduced" => Ok(Stage::Reduced),
            "closed-form" => Ok(Stage::ClosedForm),
            _ => Err(Error::Parse(format!(
                "unknown stage `{s}` (expected base, folded, cone, reduced or closed-form)"
            ))),
        }
    }
}

/// Complex JSON of one pipeline stage. The base and folded stages carry the
/// involution when one is known.
pub fn dump_complex(spec_text: &str, stage: Stage, strip: bool) -> Result<String> {
    let recipe = parse_knot_spec(spec_text)?;
    let knot = recipe.build()?;
    Ok(match stage {
        Stage::Base => complex_to_json(&knot.complex, knot.involution.as_ref()),
        Stage::Folded => complex_to_json(&fold(&knot.complex)?, knot.involution.as_ref()),
        Stage::Cone => complex_to_json(&knot.cone()?, None),
        Stage::Reduced => complex_to_json(&reduced_cone(&knot, strip)?, None),
        Stage::ClosedForm => complex_to_json(
            &materialize_closed_form(&closed_form_cone_reduction(&closed_form_spec(&recipe)?)?),
            None,
        ),
    })
}

/// Writes `contents` to `path`, or returns it for stdout when `path` is None.
pub fn emit(contents: String, path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) => {
            write_file(p, &contents)?;
            Ok(String::new())
        }
        None => Ok(contents),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t37_table() {
        let inv = parse_invariants("upper,lower").unwrap();
        let r = evaluate("torus:3,7", &inv, Engine::Both, false, NuEngine::default()).unwrap();
        let table = format_table(&r, &inv);
        assert!(table.contains("Ῡ: −6t on [0,2/3]; −4 on [2/3,2]"), "{table}");
        assert!(table.contains("Υ̲: −4 on [0,2]"), "{table}");
    }

    #[test]
    fn v0_of_t25() {
        let inv = parse_invariants("v0").unwrap();
        let r = evaluate("steps:+:1,1,1,1", &inv, Engine::ClosedForm, false, NuEngine::default()).unwrap();
        assert_eq!(r.v0, Some((Rational::from_integer(1), Rational::from_integer(1))));
        assert!(format_table(&r, &inv).contains("V̄₀ = 1, V̲₀ = 1"));
    }

    #[test]
    fn invariant_lists() {
        assert_eq!(parse_invariants("all").unwrap().len(), 5);
        assert_eq!(parse_invariants("upper,upper").unwrap().len(), 1);
        assert!(parse_invariants("middle").is_err());
        assert!(parse_invariants("").is_err());
    }

    #[test]
    fn closed_form_needs_symmetric_staircase() {
        let inv = parse_invariants("upper").unwrap();
        let e = evaluate("steps:+:1,2", &inv, Engine::ClosedForm, false, NuEngine::default()).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn csv_and_svg_files() {
        let inv = parse_invariants("upper,lower,v0").unwrap();
        let r = evaluate("torus:2,5", &inv, Engine::Generic, true, NuEngine::default()).unwrap();
        let csv = files_for(&r, &inv, OutputFormat::Csv);
        let names: Vec<&str> = csv.iter().map(|f| f.0.as_str()).collect();
        assert_eq!(names, ["T2_5_upper.csv", "T2_5_lower.csv", "T2_5_v0.csv"]);
        assert_eq!(PlFunction::from_csv(&csv[0].1).unwrap(), r.functions[&Which::Upper]);
        let svg = files_for(&r, &inv, OutputFormat::Svg);
        assert_eq!(svg.len(), 1);
        assert_eq!(svg[0].0, "T2_5.svg");
    }

    #[test]
    fn dump_stages() {
        for stage in ["base", "folded", "cone", "reduced", "closed-form"] {
            let text = dump_complex("torus:3,7", stage.parse().unwrap(), false).unwrap();
            let (c, _) = crate::io::complex_from_json(&text).unwrap();
            assert!(crate::complex::validate(&c).ok, "{stage}");
        }
        let base = dump_complex("torus:3,7", Stage::Base, false).unwrap();
        assert!(base.contains("involution"));
    }
}
