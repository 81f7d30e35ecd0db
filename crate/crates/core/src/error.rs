//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by construction, evaluation and analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter list that must be non-empty was empty.
    #[error("parameter list is empty")]
    EmptyParameters,

    /// A Schur parameter or g-coefficient violated its admissible range.
    #[error("parameter out of range at index {index}: {value} ({context})")]
    ParameterOutOfRange {
        index: usize,
        value: f64,
        context: &'static str,
    },

    /// Attempted to build a linear-fractional map with zero determinant.
    #[error("degenerate linear-fractional map (zero determinant)")]
    DegenerateMap,

    /// A composition lost all significance: the normalized determinant
    /// underflowed. Re-running at a higher precision extends the horizon.
    #[error("composition became degenerate at step {step}: normalized determinant underflowed; retry with more precision bits")]
    DegenerateComposition { step: usize },

    /// A point that must lie on the unit circle does not.
    #[error("point is not on the unit circle (|r| = {modulus})")]
    NotOnUnitCircle { modulus: f64 },

    /// The boundary points r = 1 and r = -1 are excluded.
    #[error("r = ±1 is excluded (got {re} + {im}i)")]
    ExcludedBoundaryPoint { re: f64, im: f64 },

    /// The supplied z does not match the image of the supplied r.
    #[error("z = {z} is inconsistent with the boundary point image z_r = {z_r}")]
    InconsistentPair { z: f64, z_r: f64 },

    /// The probe-tail sequences did not stabilize within the horizon.
    #[error("probe sequences failed to stabilize by n = {n}: residuals {residual_u} / {residual_v}")]
    ProbeUnstable {
        n: usize,
        residual_u: f64,
        residual_v: f64,
    },

    /// A rule with finitely many coefficients was asked past its end.
    #[error("coefficient rule exhausted: index {index} exceeds available {len}")]
    RuleExhausted { index: usize, len: usize },

    /// Catch-all for invalid arguments (non-positive period, bad horizon, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
