//! Schur parameter sequences, disc approximants, and the boundary
//! recurrences on the unit circle.
//!
//! A sequence of real parameters t_i with |t_i| < 1 determines the disc
//! approximants
//!
//! ```text
//! [w; t_i] = t_i,    [w; t_l, ..., t_k] = (t_l + w X) / (1 + t_l w X),
//! ```
//!
//! with X = [w; t_{l+1}, ..., t_k] (parameters are real, so conjugation is
//! the identity). On the unit circle the same values are produced by the
//! forward recurrences
//!
//! ```text
//! A_0 = 1, C_0 = t_0,
//! A_{n+1} = A_n + t_{n+1} r^{n+1} conj(C_n),
//! C_{n+1} = C_n + t_{n+1} r^{n+1} conj(A_n),
//! ```
//!
//! carried by [`BoundaryState`], together with the modified pair
//! Ã_n = A_n + r^{n+1} conj(C_n), C̃_n = C_n + r^{n+1} conj(A_n) that closes
//! the sequence with a final parameter equal to 1.

use crate::error::{Error, Result};
use crate::real::Real;
use crate::sphere::{cabs, cdiv, Cx, ExtendedComplex, FracMap};
use crate::{DEFAULT_WINDOW, UNIT_CIRCLE_TOL};

/// Rescaling threshold for the boundary recurrences: once |A_n| passes this,
/// A and C are divided down and the factor is tracked in `scale_pow`.
const RESCALE_AT: f64 = 1e100;

/// A rule-based or finite sequence of real Schur parameters t_i, |t_i| < 1.
#[derive(Clone, Debug)]
pub enum SchurSeq<R: Real> {
    /// Explicit finite list.
    Finite(Vec<R>),
    /// The same value at every index.
    Constant(R),
    /// t_0 = 1/2, t at index p·n equal to 2/(2n+1) for n >= 1, zero elsewhere.
    PeriodicRule { p: u32 },
}

impl<R: Real> SchurSeq<R> {
    pub fn finite(values: Vec<R>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyParameters);
        }
        for (i, t) in values.iter().enumerate() {
            check_inside(t, i)?;
        }
        Ok(Self::Finite(values))
    }

    pub fn constant(value: R) -> Result<Self> {
        check_inside(&value, 0)?;
        Ok(Self::Constant(value))
    }

    /// The period-p rule generating e_p(w) = (1 + w^p)/2.
    pub fn e_p(p: u32) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidArgument("period p must be >= 1".into()));
        }
        Ok(Self::PeriodicRule { p })
    }

    /// Parameter at index `i`. Finite rules error past their end.
    pub fn t(&self, i: usize) -> Result<R> {
        match self {
            Self::Finite(v) => v
                .get(i)
                .cloned()
                .ok_or(Error::RuleExhausted { index: i, len: v.len() }),
            Self::Constant(c) => Ok(c.clone()),
            Self::PeriodicRule { p } => {
                let p = *p as usize;
                Ok(if i == 0 {
                    R::half()
                } else if i.is_multiple_of(p) {
                    let n = (i / p) as i64;
                    R::ratio(2, 2 * n + 1)
                } else {
                    R::zero()
                })
            }
        }
    }

    /// First `count` parameters.
    pub fn params(&self, count: usize) -> Result<Vec<R>> {
        (0..count).map(|i| self.t(i)).collect()
    }

    /// Number of parameters when the rule is finite.
    pub fn len(&self) -> Option<usize> {
        match self {
            Self::Finite(v) => Some(v.len()),
            _ => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }

    /// Descriptor metadata: whether the squared parameters have a finite sum
    /// (which also forces t_i -> 0). This is the membership condition for
    /// the boundary theory used by [`runckel_check`].
    pub fn square_summable(&self) -> bool {
        match self {
            Self::Finite(_) => true,
            Self::Constant(c) => c.is_zero(),
            Self::PeriodicRule { .. } => true, // sum of 4/(2n+1)^2 converges
        }
    }
}

fn check_inside<R: Real>(t: &R, index: usize) -> Result<()> {
    if t.clone().abs() < R::one() {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange {
            index,
            value: t.to_f64(),
            context: "Schur parameter requires |t| < 1",
        })
    }
}

/// First `count` Schur parameters of e_p(w) = (1 + w^p)/2:
/// index 0 -> 1/2, index p·n -> 2/(2n+1) for n >= 1, all others 0.
pub fn e_p_params<R: Real>(p: u32, count: usize) -> Result<Vec<R>> {
    if count == 0 {
        return Err(Error::EmptyParameters);
    }
    SchurSeq::e_p(p)?.params(count)
}

/// Disc approximant [w; t_0, ..., t_n] by the backward recursion, run
/// through sphere-total map application so intermediate poles are handled.
///
/// |t_i| <= 1 with modulus 1 permitted only at the final entry; `w` finite.
pub fn approximant<R: Real>(w: &Cx<R>, t: &[R]) -> Result<ExtendedComplex<R>> {
    let (last, interior) = t.split_last().ok_or(Error::EmptyParameters)?;
    for (i, ti) in interior.iter().enumerate() {
        check_inside(ti, i)?;
    }
    if last.clone().abs() > R::one() {
        return Err(Error::ParameterOutOfRange {
            index: t.len() - 1,
            value: last.to_f64(),
            context: "final Schur parameter requires |t| <= 1",
        });
    }
    // w = 0 collapses every level to t_l; the recursion ends at t_0.
    if w.re.is_zero() && w.im.is_zero() {
        return Ok(ExtendedComplex::Finite(Cx::new(t[0].clone(), R::zero())));
    }
    let mut x = ExtendedComplex::Finite(Cx::new(last.clone(), R::zero()));
    for ti in interior.iter().rev() {
        x = schur_step(w, ti)?.apply(&x);
    }
    Ok(x)
}

/// The Möbius step t -> (w t + t_i) / (t_i w t + 1) of the backward recursion.
fn schur_step<R: Real>(w: &Cx<R>, t_i: &R) -> Result<FracMap<R>> {
    let one = Cx::new(R::one(), R::zero());
    let ti = Cx::new(t_i.clone(), R::zero());
    FracMap::new(w.clone(), ti.clone(), ti * w.clone(), one)
}

/// Composition s_0 ∘ s_1 ∘ ... ∘ s_n of the backward-recursion steps as one
/// normalized map, so arbitrary tails can be probed:
/// applying the result to t_{n+1} gives [w; t_0, ..., t_{n+1}].
///
/// Requires w != 0 and all |t_i| < 1 (each step is degenerate otherwise).
pub fn schur_map<R: Real>(w: &Cx<R>, t: &[R]) -> Result<FracMap<R>> {
    if t.is_empty() {
        return Err(Error::EmptyParameters);
    }
    for (i, ti) in t.iter().enumerate() {
        check_inside(ti, i)?;
    }
    let mut m = schur_step(w, &t[0])?;
    for ti in &t[1..] {
        m = m.compose(&schur_step(w, ti)?)?;
    }
    Ok(m)
}

/// State of the boundary recurrences at index n, for a fixed unimodular r.
///
/// A and C grow without bound on long traces; once their modulus passes a
/// threshold they are divided down by 1e100 and the count of such rescalings
/// is tracked, while P_n = prod (1 - t_k^2) is kept at true scale (it lives
/// in (0, 1]). Only ratios and scale-aware identity residuals are exposed,
/// so the rescaling is invisible to callers.
#[derive(Clone, Debug)]
pub struct BoundaryState<R: Real> {
    n: usize,
    a: Cx<R>,
    c: Cx<R>,
    product: R,
    scale_pow: u32,
    r: Cx<R>,
    r_pow: Cx<R>,
}

/// Residuals of the three algebraic identities tying the boundary
/// recurrences together; all should sit at roundoff level.
///
/// Each residual is |lhs - rhs| divided by the natural O(1)-or-larger scale
/// of the identity (the approximant values for the first two, |A_n| for the
/// third). Dividing by the raw difference scale instead would only measure
/// cancellation noise once the two ratios have converged together.
#[derive(Clone, Debug)]
pub struct BoundaryIdentities<R> {
    /// 1 - |C_n/A_n|^2 against P_n/|A_n|^2.
    pub contraction: R,
    /// C̃_n/Ã_n - C_n/A_n against r^{n+1} P_n/(A_n Ã_n).
    pub gap: R,
    /// C̃_n against r^{n+1} conj(Ã_n).
    pub reflection: R,
}

impl<R: Real> BoundaryState<R> {
    /// Initial state A_0 = 1, C_0 = t_0, P_0 = 1 - t_0^2.
    ///
    /// `r` must lie on the unit circle (within 1e-12); the recurrences are
    /// only meaningful there.
    pub fn new(t0: R, r: Cx<R>) -> Result<Self> {
        require_unimodular(&r)?;
        check_inside(&t0, 0)?;
        let product = R::one() - t0.clone() * t0.clone();
        Ok(Self {
            n: 0,
            a: Cx::new(R::one(), R::zero()),
            c: Cx::new(t0, R::zero()),
            product,
            scale_pow: 0,
            r: r.clone(),
            r_pow: r,
        })
    }

    /// Advance by one parameter. Pure: the input state is unchanged.
    pub fn step(&self, t_next: R) -> Result<Self> {
        check_inside(&t_next, self.n + 1)?;
        let s = self.r_pow.clone().scale(t_next.clone());
        let mut a = self.a.clone() + s.clone() * self.c.conj();
        let mut c = self.c.clone() + s * self.a.conj();
        let product = self.product.clone() * (R::one() - t_next.clone() * t_next);
        let mut scale_pow = self.scale_pow;
        if cabs(&a) > R::from_f64(RESCALE_AT) {
            let f = R::from_f64(RESCALE_AT);
            a = a.unscale(f.clone());
            c = c.unscale(f);
            scale_pow += 1;
        }
        Ok(Self {
            n: self.n + 1,
            a,
            c,
            product,
            scale_pow,
            r: self.r.clone(),
            r_pow: self.r_pow.clone() * self.r.clone(),
        })
    }

    pub fn index(&self) -> usize {
        self.n
    }

    /// Stored A_n (divided by 1e100 `scale_pow` times).
    pub fn a(&self) -> &Cx<R> {
        &self.a
    }

    /// Stored C_n (same scaling as A_n).
    pub fn c(&self) -> &Cx<R> {
        &self.c
    }

    /// Ã_n = A_n + r^{n+1} conj(C_n), at the stored scale.
    pub fn a_tilde(&self) -> Cx<R> {
        self.a.clone() + self.r_pow.clone() * self.c.conj()
    }

    /// C̃_n = C_n + r^{n+1} conj(A_n), at the stored scale.
    pub fn c_tilde(&self) -> Cx<R> {
        self.c.clone() + self.r_pow.clone() * self.a.conj()
    }

    /// P_n = prod_{k=0}^{n} (1 - t_k^2), at true scale; lies in (0, 1].
    pub fn product(&self) -> &R {
        &self.product
    }

    /// Number of times A and C were divided by 1e100.
    pub fn scale_pow(&self) -> u32 {
        self.scale_pow
    }

    /// r^{n+1}.
    pub fn r_power(&self) -> &Cx<R> {
        &self.r_pow
    }

    /// [r; t_0, ..., t_n] = C_n / A_n.
    pub fn approximant_value(&self) -> ExtendedComplex<R> {
        cdiv(&self.c, &self.a)
    }

    /// [r; t_0, ..., t_n, 1] = C̃_n / Ã_n; `Inf` when Ã_n vanishes exactly.
    pub fn modified_approximant(&self) -> ExtendedComplex<R> {
        cdiv(&self.c_tilde(), &self.a_tilde())
    }

    /// Scale-aware relative residuals of the three boundary identities.
    pub fn identity_residuals(&self) -> BoundaryIdentities<R> {
        let ratio = cdiv(&self.c, &self.a);
        let q2 = match &ratio {
            ExtendedComplex::Finite(z) => z.norm_sqr(),
            ExtendedComplex::Inf => R::from_f64(f64::INFINITY),
        };
        // P_n / |A_n|^2 with the stored scale removed step by step; each
        // rescale contributed a factor 1e100 to A, hence 1e200 here.
        let mut p_over_a2 = self.product.clone() / self.a.norm_sqr();
        for _ in 0..self.scale_pow {
            p_over_a2 = p_over_a2 / R::from_f64(1e200);
        }
        let contraction = rel_real(R::one() - q2, p_over_a2.clone());

        let a_t = self.a_tilde();
        let c_t = self.c_tilde();
        let gap = match (cdiv(&c_t, &a_t), ratio) {
            (ExtendedComplex::Finite(lhs1), ExtendedComplex::Finite(lhs2)) => {
                let lhs = lhs1 - lhs2;
                // r^{n+1} P_n / (A_n Ã_n), again unwinding the scale
                let mut den = self.a.clone() * a_t.clone();
                for _ in 0..self.scale_pow {
                    den = den.scale(R::from_f64(1e200));
                }
                match cdiv(&self.r_pow.clone().scale(self.product.clone()), &den) {
                    ExtendedComplex::Finite(rhs) => rel_complex(lhs, rhs),
                    ExtendedComplex::Inf => R::from_f64(f64::INFINITY),
                }
            }
            _ => R::from_f64(f64::INFINITY),
        };

        let reflection = cabs(&(c_t - self.r_pow.clone() * a_t.conj()))
            / R::one().maximum(cabs(&self.a));

        BoundaryIdentities {
            contraction,
            gap,
            reflection,
        }
    }
}

fn rel_real<R: Real>(x: R, y: R) -> R {
    let d = (x.clone() - y.clone()).abs();
    d / R::one().maximum(x.abs()).maximum(y.abs())
}

fn rel_complex<R: Real>(x: Cx<R>, y: Cx<R>) -> R {
    let d = cabs(&(x.clone() - y.clone()));
    d / R::one().maximum(cabs(&x)).maximum(cabs(&y))
}

fn require_unimodular<R: Real>(r: &Cx<R>) -> Result<()> {
    let m = cabs(r);
    if (m.clone() - R::one()).abs().to_f64() > UNIT_CIRCLE_TOL {
        return Err(Error::NotOnUnitCircle { modulus: m.to_f64() });
    }
    Ok(())
}

fn require_admissible_boundary_point<R: Real>(r: &Cx<R>) -> Result<()> {
    require_unimodular(r)?;
    let one = Cx::new(R::one(), R::zero());
    if cabs(&(r.clone() - one.clone())).to_f64() <= UNIT_CIRCLE_TOL
        || cabs(&(r.clone() + one)).to_f64() <= UNIT_CIRCLE_TOL
    {
        return Err(Error::ExcludedBoundaryPoint {
            re: r.re.to_f64(),
            im: r.im.to_f64(),
        });
    }
    Ok(())
}

/// Outcome of [`runckel_check`]: verdict plus the residual sequence
/// |[r; t_0..t_n] - 1| for inspection.
#[derive(Clone, Debug)]
pub struct RunckelCheck {
    pub is_runckel: bool,
    pub residuals: Vec<f64>,
}

/// Test whether the approximants of `seq` tend to 1 at the unimodular point
/// `r` (r != ±1): true when the residual stays below `tol` over the trailing
/// window of the horizon. Residuals of the e_p rules decay slowly (t_n ~ 1/n)
/// and oscillate, hence the window rather than a single-point test.
pub fn runckel_check<R: Real>(
    seq: &SchurSeq<R>,
    r: &Cx<R>,
    n_max: usize,
    tol: f64,
) -> Result<RunckelCheck> {
    require_admissible_boundary_point(r)?;
    let one = Cx::new(R::one(), R::zero());
    let mut state = BoundaryState::new(seq.t(0)?, r.clone())?;
    let mut residuals = Vec::with_capacity(n_max + 1);
    residuals.push(state.approximant_value().euclid_to(&one).to_f64());
    for i in 1..=n_max {
        state = state.step(seq.t(i)?)?;
        residuals.push(state.approximant_value().euclid_to(&one).to_f64());
    }
    let window = residuals.len().min(DEFAULT_WINDOW);
    let is_runckel = residuals[residuals.len() - window..]
        .iter()
        .all(|&d| d < tol);
    Ok(RunckelCheck {
        is_runckel,
        residuals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::{chordal, cx};
    use proptest::prelude::*;

    type Ec = ExtendedComplex<f64>;

    fn unit(theta: f64) -> Cx<f64> {
        Cx::new(theta.cos(), theta.sin())
    }

    #[test]
    fn e_p_parameter_tables() {
        let e3: Vec<f64> = e_p_params(3, 7).unwrap();
        assert_eq!(e3, vec![0.5, 0.0, 0.0, 2.0 / 3.0, 0.0, 0.0, 2.0 / 5.0]);
        let e1: Vec<f64> = e_p_params(1, 4).unwrap();
        assert_eq!(e1, vec![0.5, 2.0 / 3.0, 2.0 / 5.0, 2.0 / 7.0]);
        let e2: Vec<f64> = e_p_params(2, 5).unwrap();
        assert_eq!(e2, vec![0.5, 0.0, 2.0 / 3.0, 0.0, 2.0 / 5.0]);
    }

    #[test]
    fn e_p_rejects_bad_period() {
        assert!(e_p_params::<f64>(0, 4).is_err());
    }

    #[test]
    fn approximant_base_cases() {
        let w = cx(0.7, 0.1);
        let v = approximant(&w, &[0.3]).unwrap();
        assert_eq!(v, Ec::from_f64_parts(0.3, 0.0));

        let z = approximant(&cx(0.5, 0.0), &[0.0, 0.0, 0.0]).unwrap();
        assert!(chordal(&z, &Ec::zero()) < 1e-15);

        // two-term closed form: (t0 + w t1) / (1 + t0 w t1)
        let v = approximant(&cx(0.3, 0.0), &[0.5, 0.25]).unwrap();
        let expect = 0.575 / 1.0375;
        assert!(chordal(&v, &Ec::from_f64_parts(expect, 0.0)) < 1e-15);
    }

    #[test]
    fn approximant_rejects_bad_input() {
        assert!(matches!(
            approximant(&cx::<f64>(0.3, 0.0), &[]),
            Err(Error::EmptyParameters)
        ));
        // modulus 1 allowed only at the final entry
        assert!(approximant(&cx(0.3, 0.0), &[1.0, 0.5]).is_err());
        assert!(approximant(&cx(0.3, 0.0), &[0.5, 1.0]).is_ok());
    }

    #[test]
    fn boundary_initial_state() {
        let st = BoundaryState::new(0.5, unit(2.0 * std::f64::consts::PI / 3.0)).unwrap();
        assert_eq!(st.a(), &cx(1.0, 0.0));
        assert_eq!(st.c(), &cx(0.5, 0.0));
        assert_eq!(*st.product(), 0.75);
    }

    #[test]
    fn zero_parameter_leaves_a_and_c_fixed() {
        let r = unit(2.0 * std::f64::consts::PI / 3.0);
        let st = BoundaryState::new(0.5, r).unwrap().step(0.0).unwrap();
        assert_eq!(st.a(), &cx(1.0, 0.0));
        assert_eq!(st.c(), &cx(0.5, 0.0));
        assert_eq!(*st.product(), 0.75);
        assert_eq!(st.index(), 1);
    }

    #[test]
    fn boundary_requires_unimodular_r() {
        assert!(matches!(
            BoundaryState::new(0.5, cx(0.5, 0.0)),
            Err(Error::NotOnUnitCircle { .. })
        ));
    }

    #[test]
    fn modified_approximant_small_case() {
        // period 4, r = i, n = 0: (1/2 + i) / (1 + i/2) = 0.8 + 0.6i,
        // confirmed by the backward-recursion oracle below.
        let st = BoundaryState::new(0.5, cx(0.0, 1.0)).unwrap();
        let m = st.modified_approximant();
        assert!(chordal(&m, &Ec::from_f64_parts(0.8, 0.6)) < 1e-15);
        let oracle = approximant(&cx(0.0, 1.0), &[0.5, 1.0]).unwrap();
        assert!(chordal(&m, &oracle) < 1e-15);
    }

    #[test]
    fn runckel_check_on_period_rules() {
        let r3 = unit(2.0 * std::f64::consts::PI / 3.0);
        let chk = runckel_check(&SchurSeq::<f64>::e_p(3).unwrap(), &r3, 4000, 1e-3).unwrap();
        assert!(chk.is_runckel);
        assert_eq!(chk.residuals.len(), 4001);

        let chk4 = runckel_check(&SchurSeq::<f64>::e_p(4).unwrap(), &cx(0.0, 1.0), 4000, 1e-3)
            .unwrap();
        assert!(chk4.is_runckel);

        // all-zero parameters tend to 0, not 1
        let zeros = SchurSeq::constant(0.0).unwrap();
        let chk0 = runckel_check(&zeros, &r3, 500, 1e-3).unwrap();
        assert!(!chk0.is_runckel);
    }

    #[test]
    fn runckel_check_excludes_plus_minus_one() {
        let seq = SchurSeq::<f64>::e_p(3).unwrap();
        assert!(matches!(
            runckel_check(&seq, &cx(1.0, 0.0), 100, 1e-3),
            Err(Error::ExcludedBoundaryPoint { .. })
        ));
        assert!(matches!(
            runckel_check(&seq, &cx(-1.0, 0.0), 100, 1e-3),
            Err(Error::ExcludedBoundaryPoint { .. })
        ));
    }

    #[test]
    fn schur_map_matches_backward_recursion() {
        // [w; t_0, ..., t_n] = (s_0 ∘ ... ∘ s_{n-1})(t_n)
        let w = cx(0.4, 0.25);
        let t = [0.5, -0.3, 0.2, 0.7, -0.6];
        let m = schur_map(&w, &t[..4]).unwrap();
        let via_map = m.apply(&Ec::from_f64_parts(t[4], 0.0));
        let direct = approximant(&w, &t).unwrap();
        assert!(chordal(&via_map, &direct) < 1e-13);
    }

    #[test]
    fn boundary_approximants_reach_the_target_function() {
        // approximant(w, e_p params) -> (1 + w^p)/2 inside the disc
        for p in [1u32, 3] {
            let params: Vec<f64> = e_p_params(p, 240).unwrap();
            let w = cx(0.35, -0.4);
            let v = approximant(&w, &params).unwrap();
            let wp = (0..p).fold(cx::<f64>(1.0, 0.0), |acc, _| acc * w);
            let target = (wp + cx(1.0, 0.0)).scale(0.5);
            assert!(v.euclid_to(&target) < 1e-8, "p = {p}");
        }
    }

    fn arb_params() -> impl Strategy<Value = Vec<f64>> {
        proptest::collection::vec(-0.9f64..0.9, 1..24)
    }

    fn arb_theta() -> impl Strategy<Value = f64> {
        // stay away from r = ±1
        prop_oneof![0.15f64..3.0, (-3.0f64)..-0.15]
    }

    proptest! {
        #[test]
        fn forward_recurrence_matches_backward_oracle(t in arb_params(), theta in arb_theta()) {
            let r = unit(theta);
            let mut st = BoundaryState::new(t[0], r).unwrap();
            for ti in &t[1..] {
                st = st.step(*ti).unwrap();
            }
            let oracle = approximant(&unit(theta), &t).unwrap();
            prop_assert!(chordal(&st.approximant_value(), &oracle) < 1e-10);
        }

        #[test]
        fn modified_matches_appended_one(t in arb_params(), theta in arb_theta()) {
            let r = unit(theta);
            let mut st = BoundaryState::new(t[0], r).unwrap();
            for ti in &t[1..] {
                st = st.step(*ti).unwrap();
            }
            let mut with_one = t.clone();
            with_one.push(1.0);
            let oracle = approximant(&unit(theta), &with_one).unwrap();
            prop_assert!(chordal(&st.modified_approximant(), &oracle) < 1e-10);

            // modulus-1 consequence of the reflection identity
            if let ExtendedComplex::Finite(m) = st.modified_approximant() {
                prop_assert!((cabs(&m) - 1.0).abs() < 1e-12);
            }
        }

        #[test]
        fn boundary_identities_hold(t in arb_params(), theta in arb_theta()) {
            let r = unit(theta);
            let mut st = BoundaryState::new(t[0], r).unwrap();
            for ti in &t[1..] {
                st = st.step(*ti).unwrap();
                let ids = st.identity_residuals();
                prop_assert!(ids.contraction < 1e-12, "contraction: {}", ids.contraction);
                prop_assert!(ids.gap < 1e-12, "gap: {}", ids.gap);
                prop_assert!(ids.reflection < 1e-12, "reflection: {}", ids.reflection);
            }
        }

        #[test]
        fn strict_contraction(t in arb_params(), theta in arb_theta()) {
            let mut st = BoundaryState::new(t[0], unit(theta)).unwrap();
            prop_assert!(cabs(st.c()) < cabs(st.a()));
            for ti in &t[1..] {
                st = st.step(*ti).unwrap();
                prop_assert!(cabs(st.c()) < cabs(st.a()));
            }
            prop_assert!(*st.product() > 0.0 && *st.product() <= 1.0);
        }
    }
}
