//! Evaluation of Stieltjes g-fractions and Schur approximants as composed
//! linear-fractional maps, with convergence diagnostics on the singular line.
//!
//! The crate is organized around five pieces:
//!
//! - [`sphere`]: extended complex plane, chordal metric, and normalized
//!   Möbius maps with overflow-safe composition;
//! - [`schur`]: Schur parameter sequences, disc approximants, and the
//!   boundary recurrences with their algebraic identities;
//! - [`gfraction`]: g-fraction evaluation, the g ↔ Schur correspondence,
//!   and the conformal maps between the cut plane and the unit disc;
//! - [`analysis`]: convergence classification at Runckel points (classical
//!   vs. general convergence, oscillation, limit-set tracking) and the
//!   limit-periodic counterexample experiment;
//! - [`identities`]: a seeded randomized suite checking every algebraic
//!   identity the evaluation machinery relies on.
//!
//! Everything is generic over the scalar precision: `f64` by default, or an
//! arbitrary-mantissa float ([`mp::MpFloat`]) for long traces.

pub mod analysis;
pub mod error;
pub mod gfraction;
pub mod identities;
pub mod mp;
pub mod real;
pub mod schur;
pub mod sphere;

pub use error::{Error, Result};
pub use real::Real;
pub use sphere::{chordal, Cx, ExtendedComplex, FracMap};

/// Window length used by trailing-window convergence checks.
pub const DEFAULT_WINDOW: usize = 50;

/// Tolerance used when validating that a point lies on the unit circle.
pub const UNIT_CIRCLE_TOL: f64 = 1e-12;
