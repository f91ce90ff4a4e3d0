use crate::complex::{self, BifilteredComplex, FiltrationMode};
use crate::error::{Error, Result};
use crate::involutive::{fold, mapping_cone, staircase_involution, ChainMap};
use crate::staircase::{staircase_from_steps, StaircaseSpec};

/// A knot Floer complex in ALG_ALEX mode together with its involution, when
/// one is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Knot {
    pub complex: BifilteredComplex,
    pub involution: Option<ChainMap>,
    /// Set when the complex was built from a step list.
    pub staircase: Option<StaircaseSpec>,
}

impl Knot {
    /// Staircase complex; symmetric staircases get the diagonal reflection.
    pub fn from_staircase(spec: &StaircaseSpec) -> Self {
        let complex = staircase_from_steps(spec);
        let involution = spec
            .is_symmetric()
            .then(|| staircase_involution(&complex).expect("symmetric staircase reflects"));
        Knot {
            complex,
            involution,
            staircase: Some(spec.clone()),
        }
    }

    pub fn unknot() -> Self {
        Self::from_staircase(&StaircaseSpec::unknot())
    }

    /// A user-supplied complex. The involution, when given, must be a
    /// skew-filtered chain map.
    pub fn from_complex(complex: BifilteredComplex, involution: Option<ChainMap>) -> Result<Self> {
        if complex.mode() != FiltrationMode::AlgAlex {
            return Err(Error::WrongMode {
                expected: FiltrationMode::AlgAlex,
                found: complex.mode(),
            });
        }
        complex::require_valid(&complex)?;
        if let Some(i) = &involution {
            i.check_chain_map(&complex)?;
            i.check_skew_filtered(&complex)?;
        }
        Ok(Knot {
            complex,
            involution,
            staircase: None,
        })
    }

    pub fn folded(&self) -> BifilteredComplex {
        fold(&self.complex).expect("knot complexes are unfolded")
    }

    /// `Cone(fold(C), 𝓘 + I)`.
    pub fn cone(&self) -> Result<BifilteredComplex> {
        let i = self.involution.as_ref().ok_or(Error::MissingInvolution)?;
        mapping_cone(&self.folded(), i)
    }

    /// `self ⊕ other` with block-diagonal involution (absent if either
    /// summand lacks one).
    pub fn direct_sum(&self, other: &Knot) -> Result<Knot> {
        let complex = complex::direct_sum(&self.complex, &other.complex)?;
        let involution = match (&self.involution, &other.involution) {
            (Some(a), Some(b)) => Some(a.direct_sum(b)),
            _ => None,
        };
        Ok(Knot {
            complex,
            involution,
            staircase: None,
        })
    }

    /// Largest `|f1 − f2|` over all generators.
    pub fn width(&self) -> i64 {
        self.complex
            .generators()
            .iter()
            .map(|g| (g.f1 - g.f2).abs())
            .max()
            .unwrap_or(0)
    }
}
