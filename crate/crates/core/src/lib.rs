//! Exact involutive Upsilon invariants of staircase knot Floer complexes.
//!
//! The pipeline: build a bifiltered complex over F₂ (from a step list, a
//! torus knot, or JSON), fold it into Min/Max coordinates, form the mapping
//! cone of `𝓘 + I`, reduce, and read off the piecewise-linear functions
//! `Υ`, `Υᶠ`, `Ῡ`, `Υ̲` together with `V̄₀`, `V̲₀`.
//!
//! ```
//! use involutive_upsilon::{steps_from_torus_knot, upsilon, Knot, Which};
//!
//! let knot = Knot::from_staircase(&steps_from_torus_knot(3, 7).unwrap());
//! let upper = upsilon(&knot, Which::Upper).unwrap();
//! assert_eq!(upper.to_string(), "−6t on [0,2/3]; −4 on [2/3,2]");
//! ```

pub mod complex;
pub mod error;
pub mod f2;
pub mod involutive;
pub mod io;
pub mod job;
pub mod knot;
pub mod knotspec;
pub mod pl;
pub mod reduction;
pub mod staircase;
pub mod svg;
pub mod upsilon;
pub mod verify;

/// Exact rational numbers used for `t` and every invariant value.
pub type Rational = num_rational::Rational64;

pub use complex::{
    boundary, direct_sum, homology_basis, shift, validate, BifilteredComplex, Chain, FiltrationMode,
    Generator, ValidationReport,
};
pub use error::{Error, Result};
pub use involutive::{fold, mapping_cone, staircase_involution, ChainMap};
pub use knot::Knot;
pub use pl::{Line, PlFunction};
pub use reduction::{
    closed_form_cone_reduction, materialize_closed_form, reduce_bifiltered, ClosedFormOutput,
    ReductionResult,
};
pub use staircase::{classify, staircase_from_steps, steps_from_torus_knot, Sign, StaircaseSpec};
pub use upsilon::{
    deg_t, nu_function, slope_bound_check, tower_witness, upsilon, v0_invariants, TowerClassWitness,
    Which,
};
