use thiserror::Error;

use crate::complex::{FiltrationMode, ValidationReport};

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate generator id `{0}`")]
    DuplicateGenerator(String),

    #[error("unknown generator id `{0}`")]
    UnknownGenerator(String),

    #[error("duplicate entry {from} -> {to}")]
    DuplicateEntry { from: String, to: String },

    #[error("invalid complex: {0}")]
    Invalid(ValidationReport),

    #[error("expected a complex in {expected} mode, got {found}")]
    WrongMode {
        expected: FiltrationMode,
        found: FiltrationMode,
    },

    #[error("filtration mode mismatch: {0} vs {1}")]
    ModeMismatch(FiltrationMode, FiltrationMode),

    #[error("invalid step list: {0}")]
    InvalidSteps(String),

    #[error("staircase {0:?} is not symmetric")]
    Asymmetric(Vec<u32>),

    #[error("complex is not reflection-symmetric: {0}")]
    NotSymmetric(String),

    #[error("staircase has odd length {0}")]
    OddLength(usize),

    #[error("T({p},{q}) is not a torus knot: {reason}")]
    InvalidTorusKnot { p: i64, q: i64, reason: String },

    #[error("not a chain map: {0}")]
    NotChainMap(String),

    #[error("map is not filtered: {0}")]
    NotFiltered(String),

    #[error("t = {0} lies outside [0, 2]")]
    TOutOfRange(crate::Rational),

    #[error("homology in grading {grading} has rank {rank}, expected 1")]
    RankNotOne { grading: i64, rank: usize },

    #[error("representative coset has dimension {dim}, exceeding the guard {guard}")]
    CosetTooLarge { dim: usize, guard: usize },

    #[error("no involution is available for this complex")]
    MissingInvolution,

    #[error("V0 value {0} is not an integer")]
    NonIntegral(crate::Rational),

    #[error("invalid piecewise-linear function: {0}")]
    InvalidPl(String),

    #[error("{0}")]
    Parse(String),

    #[error("engine mismatch:\n{0}")]
    EngineMismatch(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CosetTooLarge { .. } => 3,
            Error::EngineMismatch(_) => 4,
            Error::Io { .. } => 5,
            _ => 2,
        }
    }
}
