//! Arithmetic on the extended complex plane.
//!
//! Points of the Riemann sphere are [`ExtendedComplex`] values: a finite
//! complex number or the single point at infinity. Linear-fractional maps
//! are [`FracMap`] coefficient quadruples kept projectively normalized so
//! that long compositions neither overflow nor silently lose the map.
//!
//! All operations are total on the sphere: division by zero lands on
//! [`ExtendedComplex::Inf`], applying a map at its pole lands on the image
//! of the pole, and the chordal metric accepts any pair of points.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::real::Real;

/// Complex number over the working scalar.
pub type Cx<R> = Complex<R>;

/// Build a complex value from double components (exact lift).
pub fn cx<R: Real>(re: f64, im: f64) -> Cx<R> {
    Complex::new(R::from_f64(re), R::from_f64(im))
}

/// Overflow-safe complex modulus.
pub fn cabs<R: Real>(z: &Cx<R>) -> R {
    hypot(z.re.abs(), z.im.abs())
}

fn hypot<R: Real>(a: R, b: R) -> R {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    if hi.is_zero() {
        return R::zero();
    }
    let q = lo / hi.clone();
    hi * (R::one() + q.clone() * q).sqrt()
}

/// sqrt(1 + m^2) without squaring m (safe for large moduli).
fn lift<R: Real>(m: R) -> R {
    hypot(R::one(), m)
}

/// Complex division in Smith's form; a zero denominator yields `Inf`.
pub fn cdiv<R: Real>(num: &Cx<R>, den: &Cx<R>) -> ExtendedComplex<R> {
    if den.re.is_zero() && den.im.is_zero() {
        return ExtendedComplex::Inf;
    }
    let (re, im) = if den.re.clone().abs() >= den.im.clone().abs() {
        let r = den.im.clone() / den.re.clone();
        let t = R::one() / (den.re.clone() + den.im.clone() * r.clone());
        (
            (num.re.clone() + num.im.clone() * r.clone()) * t.clone(),
            (num.im.clone() - num.re.clone() * r) * t,
        )
    } else {
        let r = den.re.clone() / den.im.clone();
        let t = R::one() / (den.re.clone() * r.clone() + den.im.clone());
        (
            (num.re.clone() * r.clone() + num.im.clone()) * t.clone(),
            (num.im.clone() * r - num.re.clone()) * t,
        )
    };
    ExtendedComplex::new(re, im)
}

/// Reciprocal on the sphere: 0 maps to `Inf`.
pub fn recip<R: Real>(z: &Cx<R>) -> ExtendedComplex<R> {
    cdiv(&Cx::new(R::one(), R::zero()), z)
}

/// Principal square root. For exactly-real negative arguments the branch is
/// the limit from the upper side of the cut: sqrt(-x) = +i sqrt(x).
pub fn csqrt<R: Real>(z: &Cx<R>) -> Cx<R> {
    if z.im.is_zero() {
        return if z.re >= R::zero() {
            Cx::new(z.re.sqrt(), R::zero())
        } else {
            Cx::new(R::zero(), (-z.re.clone()).sqrt())
        };
    }
    let m = cabs(z);
    if z.re >= R::zero() {
        let u = ((m + z.re.clone()) / R::two()).sqrt();
        let v = z.im.clone() / (R::two() * u.clone());
        Cx::new(u, v)
    } else {
        let mut v = ((m - z.re.clone()) / R::two()).sqrt();
        if z.im < R::zero() {
            v = -v;
        }
        let u = z.im.clone() / (R::two() * v.clone());
        Cx::new(u, v)
    }
}

/// A point of the Riemann sphere.
#[derive(Clone, Debug, PartialEq)]
pub enum ExtendedComplex<R: Real> {
    Finite(Cx<R>),
    Inf,
}

impl<R: Real> ExtendedComplex<R> {
    /// Build a finite point; non-finite components collapse to `Inf` so that
    /// no NaN or overflow artifact ever leaks into a finite value.
    pub fn new(re: R, im: R) -> Self {
        if re.is_finite() && im.is_finite() {
            Self::Finite(Cx::new(re, im))
        } else {
            Self::Inf
        }
    }

    pub fn from_complex(z: Cx<R>) -> Self {
        Self::new(z.re, z.im)
    }

    pub fn from_f64_parts(re: f64, im: f64) -> Self {
        Self::new(R::from_f64(re), R::from_f64(im))
    }

    pub fn zero() -> Self {
        Self::Finite(Cx::new(R::zero(), R::zero()))
    }

    pub fn one() -> Self {
        Self::Finite(Cx::new(R::one(), R::zero()))
    }

    pub fn is_inf(&self) -> bool {
        matches!(self, Self::Inf)
    }

    pub fn as_finite(&self) -> Option<&Cx<R>> {
        match self {
            Self::Finite(z) => Some(z),
            Self::Inf => None,
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            Self::Finite(z) => Self::Finite(z.conj()),
            Self::Inf => Self::Inf,
        }
    }

    /// Nearest double-precision point (for traces and serialization).
    pub fn to_f64_point(&self) -> ExtendedComplex<f64> {
        match self {
            Self::Finite(z) => ExtendedComplex::new(z.re.to_f64(), z.im.to_f64()),
            Self::Inf => ExtendedComplex::Inf,
        }
    }

    /// Euclidean distance to a finite target; `Inf` is at distance infinity.
    pub fn euclid_to(&self, target: &Cx<R>) -> R {
        match self {
            Self::Finite(z) => cabs(&(z.clone() - target.clone())),
            Self::Inf => R::from_f64(f64::INFINITY),
        }
    }
}

/// Finite points serialize as `{"re": .., "im": ..}`, the point at infinity
/// as the literal string `"inf"`.
impl serde::Serialize for ExtendedComplex<f64> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        match self {
            Self::Finite(z) => {
                let mut s = serializer.serialize_struct("Complex", 2)?;
                s.serialize_field("re", &z.re)?;
                s.serialize_field("im", &z.im)?;
                s.end()
            }
            Self::Inf => serializer.serialize_str("inf"),
        }
    }
}

/// Chordal distance on the sphere:
/// sigma(x, y) = 2|x - y| / sqrt((1 + |x|^2)(1 + |y|^2)), sigma(x, Inf) = 2 / sqrt(1 + |x|^2).
///
/// Symmetric, in [0, 2], and zero exactly on equal points. When both points
/// have modulus above 1 the computation is routed through 1/x, 1/y, under
/// which the metric is invariant; this keeps everything overflow-free.
pub fn chordal<R: Real>(x: &ExtendedComplex<R>, y: &ExtendedComplex<R>) -> R {
    use ExtendedComplex::{Finite, Inf};
    match (x, y) {
        (Inf, Inf) => R::zero(),
        (Inf, Finite(z)) | (Finite(z), Inf) => R::two() / lift(cabs(z)),
        (Finite(p), Finite(q)) => {
            let mp = cabs(p);
            let mq = cabs(q);
            if mp > R::one() && mq > R::one() {
                // both invertible and away from 0; recurse once
                return chordal(&recip(p), &recip(q));
            }
            let d = cabs(&(p.clone() - q.clone()));
            let (shi, slo) = {
                let sp = lift(mp);
                let sq = lift(mq);
                if sp >= sq {
                    (sp, sq)
                } else {
                    (sq, sp)
                }
            };
            R::two() * ((d / shi) / slo)
        }
    }
}

/// Linear-fractional map t -> (a t + b) / (c t + d) with nonzero determinant,
/// stored with coefficients rescaled so the largest modulus is 1.
///
/// The determinant is carried alongside the coefficients and updated
/// multiplicatively through compositions and rescalings. Recomputing it from
/// the coefficients would cancel catastrophically once a long composition
/// approaches its (rank-one) limit, reporting zero at the roundoff floor
/// instead of at true underflow.
#[derive(Clone, Debug)]
pub struct FracMap<R: Real> {
    a: Cx<R>,
    b: Cx<R>,
    c: Cx<R>,
    d: Cx<R>,
    det: Cx<R>,
}

impl<R: Real> FracMap<R> {
    pub fn new(a: Cx<R>, b: Cx<R>, c: Cx<R>, d: Cx<R>) -> Result<Self> {
        let det = a.clone() * d.clone() - b.clone() * c.clone();
        Self::with_det(a, b, c, d, det)
    }

    fn with_det(a: Cx<R>, b: Cx<R>, c: Cx<R>, d: Cx<R>, det: Cx<R>) -> Result<Self> {
        let m = Self { a, b, c, d, det }.normalized();
        if cabs(&m.det).is_vanishing() {
            return Err(Error::DegenerateMap);
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        let one = Cx::new(R::one(), R::zero());
        let zero = Cx::new(R::zero(), R::zero());
        Self {
            a: one.clone(),
            b: zero.clone(),
            c: zero,
            d: one.clone(),
            det: one,
        }
    }

    pub fn coefficients(&self) -> (&Cx<R>, &Cx<R>, &Cx<R>, &Cx<R>) {
        (&self.a, &self.b, &self.c, &self.d)
    }

    /// The maintained determinant of the normalized coefficients.
    pub fn det(&self) -> &Cx<R> {
        &self.det
    }

    /// Projective rescaling: divide all coefficients by the largest modulus
    /// (and the determinant by its square). The represented map is unchanged.
    pub fn normalized(self) -> Self {
        let s2 = self
            .a
            .norm_sqr()
            .maximum(self.b.norm_sqr())
            .maximum(self.c.norm_sqr())
            .maximum(self.d.norm_sqr());
        if s2.is_zero() {
            return self;
        }
        let s = s2.clone().sqrt();
        Self {
            a: self.a.unscale(s.clone()),
            b: self.b.unscale(s.clone()),
            c: self.c.unscale(s.clone()),
            d: self.d.unscale(s),
            det: self.det.unscale(s2),
        }
    }

    /// Apply the map to a sphere point. Total: the pole maps to `Inf` and
    /// `Inf` maps to a/c. Large arguments are routed through 1/t to avoid
    /// intermediate overflow.
    pub fn apply(&self, t: &ExtendedComplex<R>) -> ExtendedComplex<R> {
        match t {
            ExtendedComplex::Inf => cdiv(&self.a, &self.c),
            ExtendedComplex::Finite(t) => {
                if t.norm_sqr() <= R::one() {
                    let num = self.a.clone() * t.clone() + self.b.clone();
                    let den = self.c.clone() * t.clone() + self.d.clone();
                    cdiv(&num, &den)
                } else {
                    match recip(t) {
                        ExtendedComplex::Finite(s) => {
                            let num = self.a.clone() + self.b.clone() * s.clone();
                            let den = self.c.clone() + self.d.clone() * s;
                            cdiv(&num, &den)
                        }
                        // |t| > 1 so 1/t is finite; kept for totality
                        ExtendedComplex::Inf => cdiv(&self.a, &self.c),
                    }
                }
            }
        }
    }

    /// Composition self ∘ rhs as a normalized coefficient product.
    ///
    /// Errors when the normalized determinant underflows: at that point the
    /// product has numerically collapsed to a rank-one (constant) map and no
    /// precision remains at the current mantissa/exponent budget.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        Self::with_det(
            self.a.clone() * rhs.a.clone() + self.b.clone() * rhs.c.clone(),
            self.a.clone() * rhs.b.clone() + self.b.clone() * rhs.d.clone(),
            self.c.clone() * rhs.a.clone() + self.d.clone() * rhs.c.clone(),
            self.c.clone() * rhs.b.clone() + self.d.clone() * rhs.d.clone(),
            self.det.clone() * rhs.det.clone(),
        )
    }

    /// Map with conjugated coefficients, satisfying
    /// conj(m(t)) = m.conjugate()(conj(t)).
    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a.conj(),
            b: self.b.conj(),
            c: self.c.conj(),
            d: self.d.conj(),
            det: self.det.conj(),
        }
    }
}
