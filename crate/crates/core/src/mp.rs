//! Arbitrary-mantissa scalar backed by `astro_float`.
//!
//! [`MpFloat<P>`] carries `P` bits of mantissa with round-to-even at every
//! operation. Besides the wider mantissa it also has a vastly larger exponent
//! range than `f64`, which is what keeps long map compositions from
//! degenerating (see [`crate::sphere::FracMap::compose`]).

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_traits::{Num, One, Zero};

use crate::real::Real;

const RM: RoundingMode = RoundingMode::ToEven;

// Exponent floor below which a value is treated as having underflowed.
// astro_float exponents go down to about -2^31; this sits far above that
// so ordinary computations never trip it by accident.
const VANISH_EXP: i32 = -1_000_000;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

/// Software float with `P` bits of mantissa.
#[derive(Clone, Debug)]
pub struct MpFloat<const P: usize>(BigFloat);

/// 128-bit-mantissa scalar, the default oracle lane.
pub type Mp128 = MpFloat<128>;
/// 256-bit-mantissa scalar.
pub type Mp256 = MpFloat<256>;

impl<const P: usize> MpFloat<P> {
    pub fn from_big(value: BigFloat) -> Self {
        Self(value)
    }

    pub fn big(&self) -> &BigFloat {
        &self.0
    }
}

impl<const P: usize> fmt::Display for MpFloat<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl<const P: usize> PartialEq for MpFloat<P> {
    fn eq(&self, other: &Self) -> bool {
        self.0.cmp(&other.0) == Some(0)
    }
}

impl<const P: usize> PartialOrd for MpFloat<P> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.cmp(&other.0).map(|s| s.cmp(&0))
    }
}

impl<const P: usize> Add for MpFloat<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0.add(&rhs.0, P, RM))
    }
}

impl<const P: usize> Sub for MpFloat<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0.sub(&rhs.0, P, RM))
    }
}

impl<const P: usize> Mul for MpFloat<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0.mul(&rhs.0, P, RM))
    }
}

impl<const P: usize> Div for MpFloat<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        Self(self.0.div(&rhs.0, P, RM))
    }
}

impl<const P: usize> Rem for MpFloat<P> {
    type Output = Self;
    fn rem(self, rhs: Self) -> Self {
        Self(self.0.rem(&rhs.0))
    }
}

impl<const P: usize> Neg for MpFloat<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.neg())
    }
}

impl<const P: usize> Zero for MpFloat<P> {
    fn zero() -> Self {
        Self(BigFloat::from_i64(0, P))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl<const P: usize> One for MpFloat<P> {
    fn one() -> Self {
        Self(BigFloat::from_i64(1, P))
    }
}

impl<const P: usize> Num for MpFloat<P> {
    type FromStrRadixErr = String;

    /// Decimal parsing by digit accumulation at full precision.
    /// Only radix 10 is supported; scientific notation is accepted.
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, String> {
        if radix != 10 {
            return Err(format!("unsupported radix {radix}"));
        }
        let s = s.trim();
        let (sign, body) = match s.strip_prefix('-') {
            Some(rest) => (-1i64, rest),
            None => (1i64, s.strip_prefix('+').unwrap_or(s)),
        };
        let (body, exp10) = match body.split_once(['e', 'E']) {
            Some((m, e)) => (m, e.parse::<i32>().map_err(|e| e.to_string())?),
            None => (body, 0),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err("empty mantissa".to_string());
        }
        let ten = Self::from_int(10);
        let mut acc = Self::zero();
        for ch in int_part.chars().chain(frac_part.chars()) {
            let d = ch.to_digit(10).ok_or_else(|| format!("bad digit {ch:?}"))?;
            acc = acc * ten.clone() + Self::from_int(i64::from(d));
        }
        let shift = exp10 - frac_part.len() as i32;
        let scale = Self(BigFloat::from_i64(10, P).powi(shift.unsigned_abs() as usize, P, RM));
        let scaled = if shift >= 0 { acc * scale } else { acc / scale };
        Ok(if sign < 0 { -scaled } else { scaled })
    }
}

impl<const P: usize> Real for MpFloat<P> {
    const BITS: u32 = P as u32;

    fn from_f64(x: f64) -> Self {
        Self(BigFloat::from_f64(x, P))
    }

    /// Nearest double, assembled from the top 128 mantissa bits.
    fn to_f64(&self) -> f64 {
        if self.0.is_nan() {
            return f64::NAN;
        }
        if self.0.is_inf_pos() {
            return f64::INFINITY;
        }
        if self.0.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        if self.0.is_zero() {
            return 0.0;
        }
        let Some((words, _len, sign, exp, _inexact)) = self.0.as_raw_parts() else {
            return f64::NAN;
        };
        // Words are least-significant first; the value is 0.m * 2^exp.
        let top = words.last().copied().unwrap_or(0);
        let next = if words.len() >= 2 { words[words.len() - 2] } else { 0 };
        let mut v = top as f64 * 2f64.powi(exp - 64);
        v += next as f64 * 2f64.powi(exp - 128);
        if sign == Sign::Neg {
            v = -v;
        }
        v
    }

    fn from_int(n: i64) -> Self {
        Self(BigFloat::from_i64(n, P))
    }

    fn sqrt(&self) -> Self {
        Self(self.0.sqrt(P, RM))
    }

    fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    fn cos(&self) -> Self {
        CONSTS.with(|cc| Self(self.0.cos(P, RM, &mut cc.borrow_mut())))
    }

    fn sin(&self) -> Self {
        CONSTS.with(|cc| Self(self.0.sin(P, RM, &mut cc.borrow_mut())))
    }

    fn pi() -> Self {
        CONSTS.with(|cc| Self(cc.borrow_mut().pi(P, RM)))
    }

    fn is_finite(&self) -> bool {
        !self.0.is_nan() && !self.0.is_inf()
    }

    fn is_vanishing(&self) -> bool {
        self.0.is_zero() || matches!(self.0.exponent(), Some(e) if e < VANISH_EXP)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_f64() {
        for &x in &[0.0, 1.0, -2.5, 0.1, 1e300, -3.25e-200, 2.0 / 3.0] {
            let m = Mp128::from_f64(x);
            assert_eq!(m.to_f64(), x, "roundtrip failed for {x}");
        }
    }

    #[test]
    fn arithmetic_beats_double() {
        // (1/3)*3 - 1 is ~1e-39 at 128 bits, far below double's 1e-16.
        let third = Mp128::ratio(1, 3);
        let err = (third * Mp128::from_int(3) - Mp128::one()).abs();
        assert!(err.to_f64().abs() < 1e-37);
        assert!(err.to_f64().abs() > 0.0 || err.is_zero());
    }

    #[test]
    fn trig_and_pi() {
        let pi = Mp128::pi();
        assert!((pi.to_f64() - std::f64::consts::PI).abs() < 1e-15);
        let c = (pi.clone() / Mp128::from_int(3)).cos();
        assert!((c.to_f64() - 0.5).abs() < 1e-30);
        let s = (pi / Mp128::from_int(6)).sin();
        assert!((s.to_f64() - 0.5).abs() < 1e-30);
    }

    #[test]
    fn parse_decimal() {
        let x = Mp128::from_str_radix("-12.5e-1", 10).unwrap();
        assert_eq!(x.to_f64(), -1.25);
        let y = Mp128::from_str_radix("42", 10).unwrap();
        assert_eq!(y.to_f64(), 42.0);
        assert!(Mp128::from_str_radix("zz", 10).is_err());
    }

    #[test]
    fn vanishing_needs_extreme_exponent() {
        let tiny = Mp128::from_f64(1e-300);
        assert!(!tiny.is_vanishing());
        let mut x = tiny;
        for _ in 0..12 {
            x = x.clone() * x;
        }
        assert!(x.is_vanishing());
    }
}
