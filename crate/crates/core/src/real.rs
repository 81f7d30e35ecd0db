//! Scalar abstraction over the working precision.
//!
//! Everything in this crate is generic over a real scalar type. The default
//! lane is `f64`; the [`crate::mp`] module provides an arbitrary-mantissa
//! float for long traces where double precision runs out of headroom.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::Num;

/// Real scalar operations required by the evaluation and analysis code.
///
/// Implementors must provide correctly rounded basic arithmetic at the
/// advertised [`Real::BITS`] of mantissa. Conversions from `f64` and small
/// integers are exact (every implementor carries at least 53 bits).
pub trait Real: Num + Neg<Output = Self> + Clone + PartialOrd + Debug + Display + 'static {
    /// Mantissa width in bits.
    const BITS: u32;

    /// Exact conversion from a double.
    fn from_f64(x: f64) -> Self;

    /// Nearest double (used for diagnostics and serialization only).
    fn to_f64(&self) -> f64;

    /// Exact conversion from a small integer (|n| < 2^53).
    fn from_int(n: i64) -> Self;

    fn sqrt(&self) -> Self;
    fn abs(&self) -> Self;
    fn cos(&self) -> Self;
    fn sin(&self) -> Self;
    fn pi() -> Self;

    /// Neither infinite nor NaN.
    fn is_finite(&self) -> bool;

    /// True when the magnitude is too small to carry any significance
    /// (zero, or below the underflow threshold of the representation).
    fn is_vanishing(&self) -> bool;

    fn maximum(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn half() -> Self {
        Self::one() / Self::two()
    }

    /// n/d as an exactly rounded quotient of exact integers.
    fn ratio(n: i64, d: i64) -> Self {
        Self::from_int(n) / Self::from_int(d)
    }
}

impl Real for f64 {
    const BITS: u32 = 53;

    #[inline]
    fn from_f64(x: f64) -> Self {
        x
    }

    #[inline]
    fn to_f64(&self) -> f64 {
        *self
    }

    #[inline]
    fn from_int(n: i64) -> Self {
        n as f64
    }

    #[inline]
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }

    #[inline]
    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    #[inline]
    fn cos(&self) -> Self {
        f64::cos(*self)
    }

    #[inline]
    fn sin(&self) -> Self {
        f64::sin(*self)
    }

    #[inline]
    fn pi() -> Self {
        std::f64::consts::PI
    }

    #[inline]
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }

    #[inline]
    fn is_vanishing(&self) -> bool {
        // Subnormals have already lost mantissa bits.
        self.abs() < f64::MIN_POSITIVE
    }
}
