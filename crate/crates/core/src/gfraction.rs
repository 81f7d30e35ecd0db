//! Stieltjes g-fraction evaluation and the correspondence with Schur
//! parameter sequences.
//!
//! A g-fraction is determined by coefficients g_i in (0, 1):
//!
//! ```text
//! 1/(1 - g_1 z/(1 - g_2 (1 - g_1) z/(1 - ...)))
//! ```
//!
//! Writing b_1 = g_1 and b_i = g_i (1 - g_{i-1}), the n-th approximant is
//! the composition H_n(z; t) = h_0 ∘ h_1 ∘ ... ∘ h_n(z; t) of the maps
//! h_i(z; t) = a_i/(1 + t) with a_0 = 1 and a_i = -b_i z. The evaluator
//! composes these left to right while keeping one normalized [`FracMap`],
//! so the value at the tails 0, ∞ and at arbitrary probe points all come
//! from the same pass.
//!
//! The coefficients correspond to real Schur parameters via t_{k-1} = 1 - 2 g_k,
//! and the conformal pair [`w_of_z`]/[`z_of_w`] carries the cut plane
//! C = ℂ∖[1, ∞) onto the unit disc. Note that [`z_of_w`] is 4w/(1 + w)^2:
//! this is the form that inverts [`w_of_z`] and sends unimodular points onto
//! the singular line (z = sec²(θ/2) at w = e^{iθ}), which pins down the
//! mapping used throughout.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::real::Real;
use crate::schur::{approximant, SchurSeq};
use crate::sphere::{cabs, cdiv, csqrt, Cx, ExtendedComplex, FracMap};
use crate::UNIT_CIRCLE_TOL;

/// Coefficient source g_i (i >= 1) for a g-fraction.
#[derive(Clone, Debug)]
enum GRule<R: Real> {
    /// Explicit list: entry k is g_{k+1}.
    Finite(Vec<R>),
    /// The same coefficient at every index.
    Constant(R),
    /// Derived from a Schur parameter rule via g_k = (1 - t_{k-1})/2.
    Schur(SchurSeq<R>),
}

/// A g-coefficient sequence with derived partial numerators.
#[derive(Clone, Debug)]
pub struct GFraction<R: Real> {
    rule: GRule<R>,
}

fn check_g_range<R: Real>(g: &R, index: usize) -> Result<()> {
    if *g > R::zero() && *g < R::one() {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange {
            index,
            value: g.to_f64(),
            context: "g-coefficient requires g in (0, 1)",
        })
    }
}

impl<R: Real> GFraction<R> {
    /// Explicit coefficients [g_1, g_2, ...]; each must lie in (0, 1).
    pub fn from_coefficients(g: Vec<R>) -> Result<Self> {
        if g.is_empty() {
            return Err(Error::EmptyParameters);
        }
        for (k, gi) in g.iter().enumerate() {
            check_g_range(gi, k + 1)?;
        }
        Ok(Self {
            rule: GRule::Finite(g),
        })
    }

    /// Constant coefficient g in (0, 1).
    pub fn constant(g: R) -> Result<Self> {
        check_g_range(&g, 1)?;
        Ok(Self {
            rule: GRule::Constant(g),
        })
    }

    /// Coefficients derived from a Schur parameter rule (t_{k-1} = 1 - 2 g_k);
    /// |t| < 1 guarantees g in (0, 1), so no further validation is needed.
    pub fn from_schur_seq(seq: SchurSeq<R>) -> Self {
        Self {
            rule: GRule::Schur(seq),
        }
    }

    /// The fraction generated by e_p(w) = (1 + w^p)/2.
    pub fn e_p(p: u32) -> Result<Self> {
        Ok(Self::from_schur_seq(SchurSeq::e_p(p)?))
    }

    /// g_i for i >= 1. Finite rules error past their end.
    pub fn g(&self, i: usize) -> Result<R> {
        debug_assert!(i >= 1, "g-coefficients are indexed from 1");
        match &self.rule {
            GRule::Finite(v) => v
                .get(i - 1)
                .cloned()
                .ok_or(Error::RuleExhausted { index: i, len: v.len() }),
            GRule::Constant(c) => Ok(c.clone()),
            GRule::Schur(seq) => Ok((R::one() - seq.t(i - 1)?) / R::two()),
        }
    }

    /// Partial-numerator coefficient b_1 = g_1, b_i = g_i (1 - g_{i-1});
    /// lies in (0, 1).
    pub fn b(&self, i: usize) -> Result<R> {
        debug_assert!(i >= 1);
        if i == 1 {
            self.g(1)
        } else {
            Ok(self.g(i)? * (R::one() - self.g(i - 1)?))
        }
    }

    /// Highest usable approximant index for finite rules (`None` = unbounded).
    pub fn max_index(&self) -> Option<usize> {
        match &self.rule {
            GRule::Finite(v) => Some(v.len()),
            GRule::Schur(seq) => seq.len(),
            GRule::Constant(_) => None,
        }
    }

    /// The Schur parameters t_0 .. t_{count-1} of the corresponding disc
    /// function, via t_{k-1} = 1 - 2 g_k.
    pub fn schur_params(&self, count: usize) -> Result<Vec<R>> {
        (1..=count)
            .map(|k| Ok(R::one() - R::two() * self.g(k)?))
            .collect()
    }
}

/// Translate Schur parameters into a (finite) g-fraction: g_k = (1 - t_{k-1})/2.
pub fn g_from_schur<R: Real>(t: &[R]) -> Result<GFraction<R>> {
    if t.is_empty() {
        return Err(Error::EmptyParameters);
    }
    let g = t
        .iter()
        .enumerate()
        .map(|(i, ti)| {
            if ti.clone().abs() < R::one() {
                Ok((R::one() - ti.clone()) / R::two())
            } else {
                Err(Error::ParameterOutOfRange {
                    index: i,
                    value: ti.to_f64(),
                    context: "Schur parameter requires |t| < 1",
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    GFraction::from_coefficients(g)
}

/// Inverse translation: the first `count` Schur parameters of `f`.
pub fn schur_from_g<R: Real>(f: &GFraction<R>, count: usize) -> Result<Vec<R>> {
    f.schur_params(count)
}

/// Partial numerators [a_0, ..., a_{count-1}] of the approximant maps at `z`:
/// a_0 = 1, a_i = -b_i z.
pub fn partial_numerators<R: Real>(
    f: &GFraction<R>,
    z: &Cx<R>,
    count: usize,
) -> Result<Vec<Cx<R>>> {
    if count == 0 {
        return Err(Error::EmptyParameters);
    }
    let mut out = Vec::with_capacity(count);
    out.push(Cx::new(R::one(), R::zero()));
    for i in 1..count {
        out.push(-z.clone().scale(f.b(i)?));
    }
    Ok(out)
}

/// Streaming evaluation of H_0, H_1, ... at a fixed z, one composition per
/// step, with the running map kept normalized.
pub struct Evaluator<'a, R: Real> {
    f: &'a GFraction<R>,
    z: Cx<R>,
    map: FracMap<R>,
    n: usize,
}

impl<'a, R: Real> Evaluator<'a, R> {
    /// Starts at n = 0, i.e. with the map h_0 : t -> 1/(1 + t).
    pub fn new(f: &'a GFraction<R>, z: Cx<R>) -> Self {
        let one = Cx::new(R::one(), R::zero());
        let zero = Cx::new(R::zero(), R::zero());
        let h0 = FracMap::new(zero, one.clone(), one.clone(), one)
            .expect("h_0 is never degenerate");
        Self { f, z, map: h0, n: 0 }
    }

    /// Index n of the currently held map H_n.
    pub fn index(&self) -> usize {
        self.n
    }

    /// The composed map H_n itself.
    pub fn map(&self) -> &FracMap<R> {
        &self.map
    }

    /// Compose the next step h_{n+1}. On determinant underflow reports the
    /// step index at which significance ran out.
    pub fn advance(&mut self) -> Result<usize> {
        let i = self.n + 1;
        let a_i = -self.z.clone().scale(self.f.b(i)?);
        let one = Cx::new(R::one(), R::zero());
        let zero = Cx::new(R::zero(), R::zero());
        let h = FracMap::new(zero, a_i, one.clone(), one)
            .map_err(|_| Error::DegenerateComposition { step: i })?;
        self.map = self
            .map
            .compose(&h)
            .map_err(|_| Error::DegenerateComposition { step: i })?;
        self.n = i;
        Ok(i)
    }

    pub fn value(&self, tail: &ExtendedComplex<R>) -> ExtendedComplex<R> {
        self.map.apply(tail)
    }

    pub fn at_zero(&self) -> ExtendedComplex<R> {
        self.map.apply(&ExtendedComplex::zero())
    }

    pub fn at_inf(&self) -> ExtendedComplex<R> {
        self.map.apply(&ExtendedComplex::Inf)
    }
}

/// H_n(z; tail) through n compositions with per-step normalization.
/// `tail` may be 0, ∞, or any probe value.
pub fn evaluate<R: Real>(
    f: &GFraction<R>,
    z: &Cx<R>,
    n: usize,
    tail: &ExtendedComplex<R>,
) -> Result<ExtendedComplex<R>> {
    let mut ev = Evaluator::new(f, z.clone());
    while ev.index() < n {
        ev.advance()?;
    }
    Ok(ev.value(tail))
}

/// Conformal map of the cut plane ℂ∖[1, ∞) onto the unit disc, with the
/// square root positive for z < 1. Computed as (1 - s)/(1 + s) with
/// s = sqrt(1 - z), which is exact at z = 0 and free of cancellation.
/// Points on the cut take the limit from the upper side (z = 1 maps to w = 1).
pub fn w_of_z<R: Real>(z: &Cx<R>) -> Cx<R> {
    let one = Cx::new(R::one(), R::zero());
    let s = csqrt(&(one.clone() - z.clone()));
    match cdiv(&(one.clone() - s.clone()), &(one + s)) {
        ExtendedComplex::Finite(w) => w,
        // 1 + s = 0 cannot happen: the principal branch has Re s >= 0
        ExtendedComplex::Inf => unreachable!("principal branch keeps 1 + s away from 0"),
    }
}

/// Inverse of [`w_of_z`]: z = 4w/(1 + w)^2. At w = -1 the value is `Inf`.
/// On the unit circle w = e^{iθ} the value is real: 1/cos²(θ/2).
pub fn z_of_w<R: Real>(w: &Cx<R>) -> ExtendedComplex<R> {
    let one = Cx::new(R::one(), R::zero());
    let den = (one.clone() + w.clone()) * (one + w.clone());
    let num = w.clone().scale(R::from_f64(4.0));
    cdiv(&num, &den)
}

/// Image z_r = 2/(1 + Re r) > 1 of a unimodular point r != ±1 on the
/// singular line; agrees with [`z_of_w`] at r.
pub fn runckel_z<R: Real>(r: &Cx<R>) -> Result<R> {
    let m = cabs(r);
    if (m.clone() - R::one()).abs().to_f64() > UNIT_CIRCLE_TOL {
        return Err(Error::NotOnUnitCircle { modulus: m.to_f64() });
    }
    let one = Cx::new(R::one(), R::zero());
    if cabs(&(r.clone() - one.clone())).to_f64() <= UNIT_CIRCLE_TOL
        || cabs(&(r.clone() + one)).to_f64() <= UNIT_CIRCLE_TOL
    {
        return Err(Error::ExcludedBoundaryPoint {
            re: r.re.to_f64(),
            im: r.im.to_f64(),
        });
    }
    Ok(R::two() / (R::one() + r.re.clone()))
}

/// Tail probe l_{n+1}(w; t) = -2 (1 - g_{n+1})(1 - t) w / ((1 - w t)(1 + w)).
///
/// Used as u_{n+1} = l_{n+1}(r; t_{n+1}) with the conjugate partner
/// v_{n+1} = conj(u_{n+1}); the conjugate is taken directly rather than by a
/// second evaluation at conj(r), which guarantees the pair structure exactly.
pub fn tail_probe<R: Real>(
    f: &GFraction<R>,
    n: usize,
    w: &Cx<R>,
    t: &R,
) -> Result<ExtendedComplex<R>> {
    let one = Cx::new(R::one(), R::zero());
    let wp1 = one.clone() + w.clone();
    if cabs(&wp1).is_zero() {
        return Err(Error::InvalidArgument(
            "tail probe is undefined at w = -1".into(),
        ));
    }
    let g = f.g(n + 1)?;
    let num = w
        .clone()
        .scale(-(R::two()) * (R::one() - g) * (R::one() - t.clone()));
    let den = (one - w.clone().scale(t.clone())) * wp1;
    Ok(cdiv(&num, &den))
}

/// The disc-to-plane transport E -> ((1 + w)/(1 - w)) (1 - w E)/(1 + w E)
/// as a single map, total on the sphere. Degenerate at w = 0, ±1.
pub fn correspondence_map<R: Real>(w: &Cx<R>) -> Result<FracMap<R>> {
    let one = Cx::new(R::one(), R::zero());
    let wp1 = one.clone() + w.clone();
    let wm1 = one - w.clone();
    FracMap::new(
        -(w.clone()) * wp1.clone(),
        wp1,
        w.clone() * wm1.clone(),
        wm1,
    )
}

/// The g-fraction value at z = z_of_w(w) computed through the disc side:
/// ((1 + w)/(1 - w)) (1 - w E)/(1 + w E) with E = [w; e_params].
/// Requires |w| < 1; the value is `Inf` when w E = -1.
pub fn correspondence_value<R: Real>(e_params: &[R], w: &Cx<R>) -> Result<ExtendedComplex<R>> {
    if cabs(w) >= R::one() {
        return Err(Error::InvalidArgument(
            "correspondence requires |w| < 1".into(),
        ));
    }
    if w.re.is_zero() && w.im.is_zero() {
        return Ok(ExtendedComplex::one());
    }
    let e = approximant(w, e_params)?;
    Ok(correspondence_map(w)?.apply(&e))
}

/// Probe values attached to one trace record: the tail u_n, and the
/// approximant evaluated at u_n and at its conjugate v_n.
#[derive(Clone, Debug, Serialize)]
pub struct ProbePoint {
    pub u: ExtendedComplex<f64>,
    pub at_u: ExtendedComplex<f64>,
    pub at_v: ExtendedComplex<f64>,
}

/// Per-step record of approximant values (double precision; the underlying
/// computation runs at the scalar's full precision).
#[derive(Clone, Debug, Serialize)]
pub struct TraceRecord {
    pub n: usize,
    pub at_zero: ExtendedComplex<f64>,
    pub at_inf: ExtendedComplex<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probe: Option<ProbePoint>,
}

/// Records indexed consecutively from n = 0. When the composition ran out of
/// significance before the horizon, `degenerate_at` holds the failing step
/// and the records stop just before it.
#[derive(Clone, Debug, Serialize)]
pub struct ApproximantTrace {
    pub records: Vec<TraceRecord>,
    pub degenerate_at: Option<usize>,
}

impl ApproximantTrace {
    pub fn last_index(&self) -> usize {
        self.records.len().saturating_sub(1)
    }
}

/// One evaluation pass collecting H_n(z; 0) and H_n(z; ∞) for n = 0..=n_max,
/// plus H_n(z; u_n), H_n(z; conj u_n) when a probe point r is supplied
/// (u_n = l_n(r; t_n) for n >= 1).
///
/// Composition degeneracy does not error: the trace is truncated and the
/// failing step recorded, since by that point the approximants have
/// collapsed onto their limit at the current precision.
pub fn trace<R: Real>(
    f: &GFraction<R>,
    z: &Cx<R>,
    n_max: usize,
    probe_r: Option<&Cx<R>>,
) -> Result<ApproximantTrace> {
    let mut ev = Evaluator::new(f, z.clone());
    let mut records = Vec::with_capacity(n_max + 1);
    let mut degenerate_at = None;
    loop {
        let n = ev.index();
        let probe = match probe_r {
            Some(r) if n >= 1 => {
                let t_n = R::one() - R::two() * f.g(n + 1)?;
                let u = tail_probe(f, n - 1, r, &t_n)?;
                let v = u.conj();
                Some(ProbePoint {
                    u: u.to_f64_point(),
                    at_u: ev.value(&u).to_f64_point(),
                    at_v: ev.value(&v).to_f64_point(),
                })
            }
            _ => None,
        };
        records.push(TraceRecord {
            n,
            at_zero: ev.at_zero().to_f64_point(),
            at_inf: ev.at_inf().to_f64_point(),
            probe,
        });
        if n == n_max {
            break;
        }
        match ev.advance() {
            Ok(_) => {}
            Err(Error::DegenerateComposition { step }) => {
                degenerate_at = Some(step);
                break;
            }
            Err(other) => return Err(other),
        }
    }
    Ok(ApproximantTrace {
        records,
        degenerate_at,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::{chordal, cx};
    use num_complex::Complex64;
    use proptest::prelude::*;

    type Ec = ExtendedComplex<f64>;

    /// Independent oracle: plain backward recurrence x <- a_i/(1 + x),
    /// no map composition involved.
    fn backward_eval(f: &GFraction<f64>, z: Complex64, n: usize, tail: Complex64) -> Complex64 {
        let mut x = tail;
        for i in (0..=n).rev() {
            let a_i = if i == 0 {
                Complex64::new(1.0, 0.0)
            } else {
                -f.b(i).unwrap() * z
            };
            x = a_i / (Complex64::new(1.0, 0.0) + x);
        }
        x
    }

    #[test]
    fn partial_numerators_constant_rule() {
        let f = GFraction::constant(0.5).unwrap();
        let a = partial_numerators(&f, &cx(-3.0, 0.0), 5).unwrap();
        assert_eq!(a[0], cx(1.0, 0.0));
        assert_eq!(a[1], cx(1.5, 0.0));
        assert_eq!(a[2], cx(0.75, 0.0));
        assert_eq!(a[3], cx(0.75, 0.0));
        assert_eq!(a[4], cx(0.75, 0.0));
    }

    #[test]
    fn period_three_numerator_tables() {
        let f = GFraction::<f64>::e_p(3).unwrap();
        let expect_b = [
            1.0 / 4.0,
            3.0 / 8.0,
            1.0 / 4.0,
            1.0 / 12.0,
            5.0 / 12.0,
            1.0 / 4.0,
            3.0 / 20.0,
            7.0 / 20.0,
        ];
        for (i, &b) in expect_b.iter().enumerate() {
            assert!((f.b(i + 1).unwrap() - b).abs() < 1e-15, "b_{}", i + 1);
        }
        // at z = 4 the displayed numerators are b_i z
        let a = partial_numerators(&f, &cx(4.0, 0.0), 9).unwrap();
        assert_eq!(a[0], cx(1.0, 0.0));
        let shown = [1.0, 3.0 / 2.0, 1.0, 1.0 / 3.0, 5.0 / 3.0, 1.0, 3.0 / 5.0, 7.0 / 5.0];
        for (i, &s) in shown.iter().enumerate() {
            assert!((-a[i + 1].re - s).abs() < 1e-15);
            assert_eq!(a[i + 1].im, 0.0);
        }
    }

    #[test]
    fn schur_translation_and_roundtrip() {
        let f = g_from_schur(&[0.5f64]).unwrap();
        assert_eq!(f.g(1).unwrap(), 0.25);
        let f0 = g_from_schur(&[0.0f64]).unwrap();
        assert_eq!(f0.g(1).unwrap(), 0.5);

        // e_3 coefficients: g_{1+3k} = (2k-1)/(2(2k+1)), others 1/2
        let e3 = GFraction::<f64>::e_p(3).unwrap();
        assert_eq!(e3.g(1).unwrap(), 0.25);
        assert_eq!(e3.g(2).unwrap(), 0.5);
        assert_eq!(e3.g(3).unwrap(), 0.5);
        assert!((e3.g(4).unwrap() - 1.0 / 6.0).abs() < 1e-15);
        assert!((e3.g(7).unwrap() - 3.0 / 10.0).abs() < 1e-15);

        assert!(g_from_schur(&[1.5f64]).is_err());
        assert!(GFraction::from_coefficients(vec![0.5, 1.0]).is_err());
    }

    proptest! {
        #[test]
        fn schur_g_roundtrip_is_identity(t in proptest::collection::vec(-0.99f64..0.99, 1..20)) {
            let f = g_from_schur(&t).unwrap();
            let back = schur_from_g(&f, t.len()).unwrap();
            for (a, b) in t.iter().zip(&back) {
                prop_assert!((a - b).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn evaluate_step_zero_is_one() {
        let f = GFraction::constant(0.3).unwrap();
        let v = evaluate(&f, &cx(2.7, -1.1), 0, &Ec::zero()).unwrap();
        assert!(chordal(&v, &Ec::one()) < 1e-15);
    }

    #[test]
    fn periodic_fraction_converges_to_fixed_point() {
        // Constant g = 1/2 makes every Schur parameter zero, so the limit is
        // (1 + w)/(1 - w) = 1/sqrt(1 - z); at z = -3 that is 1/2. (The tail
        // fixed point alone would give 2(1 - sqrt(1 - z))/z = 2/3, but that
        // belongs to the fraction with b_1 = 1/4; here b_1 = g_1 = 1/2.)
        let f = GFraction::constant(0.5).unwrap();
        let v = evaluate(&f, &cx(-3.0, 0.0), 200, &Ec::zero()).unwrap();
        assert!(chordal(&v, &Ec::from_f64_parts(0.5, 0.0)) < 1e-10);

        // independent backward recurrence agrees
        let oracle = backward_eval(&f, Complex64::new(-3.0, 0.0), 200, Complex64::new(0.0, 0.0));
        assert!((oracle.re - 0.5).abs() < 1e-10);
        assert_eq!(oracle.im, 0.0);

        // and so does the disc-side route (all Schur parameters vanish)
        let w = w_of_z(&cx(-3.0, 0.0));
        let disc = correspondence_value(&[0.0, 0.0], &w).unwrap();
        assert!(chordal(&v, &disc) < 1e-10);
    }

    #[test]
    fn composed_and_backward_paths_agree() {
        let f = GFraction::<f64>::e_p(3).unwrap();
        for n in [1usize, 7, 40, 173] {
            let via_maps = evaluate(&f, &cx(4.0, 0.0), n, &Ec::zero()).unwrap();
            let oracle = backward_eval(&f, Complex64::new(4.0, 0.0), n, Complex64::new(0.0, 0.0));
            assert!(
                chordal(&via_maps, &Ec::from_f64_parts(oracle.re, oracle.im)) < 1e-11,
                "n = {n}"
            );
        }
    }

    #[test]
    fn counterexample_point_tends_to_one() {
        let f = GFraction::<f64>::e_p(3).unwrap();
        let v = evaluate(&f, &cx(4.0, 0.0), 3000, &Ec::zero()).unwrap();
        assert!(chordal(&v, &Ec::one()) < 1e-5);
    }

    #[test]
    fn degenerate_composition_reports_step() {
        // exponentially convergent point: the normalized determinant
        // eventually underflows in doubles
        let f = GFraction::constant(0.5).unwrap();
        let err = evaluate(&f, &cx(-3.0, 0.0), 5000, &Ec::zero()).unwrap_err();
        match err {
            // det shrinks ~3x per step; doubles run out near step 650
            Error::DegenerateComposition { step } => {
                assert!((500..900).contains(&step), "step = {step}")
            }
            other => panic!("expected degeneracy, got {other:?}"),
        }
        // the 128-bit lane sails through the same horizon
        use crate::mp::Mp128;
        let f = GFraction::<Mp128>::constant(Mp128::from_f64(0.5)).unwrap();
        let v = evaluate(&f, &cx(-3.0, 0.0), 5000, &ExtendedComplex::zero()).unwrap();
        let v64 = v.to_f64_point();
        assert!(chordal(&v64, &Ec::from_f64_parts(0.5, 0.0)) < 1e-12);
    }

    #[test]
    fn conformal_map_values() {
        assert_eq!(w_of_z(&cx::<f64>(0.0, 0.0)), cx(0.0, 0.0));
        let w = w_of_z(&cx::<f64>(-3.0, 0.0));
        assert!((w.re - (-1.0 / 3.0)).abs() < 1e-15 && w.im == 0.0);
        let w = w_of_z(&cx::<f64>(0.75, 0.0));
        assert!((w.re - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(w_of_z(&cx::<f64>(1.0, 0.0)), cx(1.0, 0.0));

        assert_eq!(z_of_w(&cx(0.0, 0.0)), Ec::zero());
        assert_eq!(z_of_w(&cx(-1.0, 0.0)), Ec::Inf);
        let th = 2.0 * std::f64::consts::PI / 3.0;
        let z = z_of_w(&cx(th.cos(), th.sin()));
        assert!(chordal(&z, &Ec::from_f64_parts(4.0, 0.0)) < 1e-12);
        let z = z_of_w(&cx(0.0, 1.0));
        assert!(chordal(&z, &Ec::from_f64_parts(2.0, 0.0)) < 1e-12);
    }

    #[test]
    fn runckel_z_table() {
        let th = |p: f64| 2.0 * std::f64::consts::PI / p;
        assert!((runckel_z(&cx::<f64>(th(3.0).cos(), th(3.0).sin())).unwrap() - 4.0).abs() < 1e-12);
        assert!((runckel_z(&cx::<f64>(0.0, 1.0)).unwrap() - 2.0).abs() < 1e-12);
        assert!((runckel_z(&cx::<f64>(th(6.0).cos(), th(6.0).sin())).unwrap() - 4.0 / 3.0).abs() < 1e-12);
        assert!(matches!(
            runckel_z(&cx::<f64>(1.0, 0.0)),
            Err(Error::ExcludedBoundaryPoint { .. })
        ));
        assert!(matches!(
            runckel_z(&cx::<f64>(0.5, 0.5)),
            Err(Error::NotOnUnitCircle { .. })
        ));
    }

    proptest! {
        #[test]
        fn conformal_roundtrip_on_cut_plane(re in -6.0f64..0.9, im in -4.0f64..4.0) {
            // keep clear of the cut [1, inf)
            prop_assume!(re < 0.95 || im.abs() > 0.05);
            let z = cx(re, im);
            let back = z_of_w(&w_of_z(&z));
            prop_assert!(chordal(&back, &Ec::Finite(z)) < 1e-12);
        }

        #[test]
        fn runckel_z_agrees_with_conformal_image(theta in 0.2f64..3.0) {
            let r = cx(theta.cos(), theta.sin());
            let zr = runckel_z(&r).unwrap();
            let zw = z_of_w(&r);
            prop_assert!(chordal(&zw, &Ec::from_f64_parts(zr, 0.0)) < 1e-12);
        }
    }

    #[test]
    fn tail_probe_values() {
        let f = GFraction::constant(0.5).unwrap();
        // factor (1 - t) vanishes
        let v = tail_probe(&f, 3, &cx(0.3, 0.2), &1.0).unwrap();
        assert_eq!(v, Ec::zero());
        // factor w vanishes
        let v = tail_probe(&f, 0, &cx(0.0, 0.0), &0.25).unwrap();
        assert_eq!(v, Ec::zero());
        // g = 1/2, t = 0, w = i -> -(1 + i)/2
        let v = tail_probe(&f, 5, &cx(0.0, 1.0), &0.0).unwrap();
        assert!(chordal(&v, &Ec::from_f64_parts(-0.5, -0.5)) < 1e-15);
        assert!(tail_probe(&f, 0, &cx(-1.0, 0.0), &0.3).is_err());
    }

    #[test]
    fn correspondence_trivial_cases() {
        // e ≡ 0: value is (1 + w)/(1 - w)
        let w = cx(0.4, -0.2);
        let v = correspondence_value(&[0.0, 0.0, 0.0], &w).unwrap();
        let expect = (Complex64::new(1.0, 0.0) + Complex64::new(0.4, -0.2))
            / (Complex64::new(1.0, 0.0) - Complex64::new(0.4, -0.2));
        assert!(chordal(&v, &Ec::from_f64_parts(expect.re, expect.im)) < 1e-14);

        let v = correspondence_value(&[0.5, 0.2], &cx(0.0, 0.0)).unwrap();
        assert_eq!(v, Ec::one());

        assert!(correspondence_value(&[0.5], &cx(1.2, 0.0)).is_err());
    }

    #[test]
    fn correspondence_approaches_plane_evaluation() {
        // both routes of the class correspondence, computed independently
        let f = GFraction::<f64>::e_p(3).unwrap();
        for &wre in &[0.2, 0.5, 0.7] {
            let w = cx(wre, 0.0);
            let e_params = f.schur_params(400).unwrap();
            let disc_side = correspondence_value(&e_params, &w).unwrap();
            let z = match z_of_w(&w) {
                Ec::Finite(z) => z,
                Ec::Inf => unreachable!(),
            };
            let plane_side = evaluate(&f, &z, 400, &Ec::zero()).unwrap();
            assert!(chordal(&disc_side, &plane_side) < 1e-8, "w = {wre}");
        }
    }

    #[test]
    fn real_arguments_stay_real_and_positive_branch_holds() {
        // reality below the cut
        let f = GFraction::<f64>::e_p(3).unwrap();
        for &z in &[-5.0, -1.0, 0.5, 0.9] {
            for n in [5usize, 60] {
                let v = evaluate(&f, &cx(z, 0.0), n, &Ec::zero()).unwrap();
                let v = v.as_finite().expect("finite");
                assert_eq!(v.im, 0.0, "z = {z}, n = {n}");
            }
        }
        // Wall positivity on a cut-plane grid: Re(sqrt(1 - z) H_n(z; 0)) > 0
        let grid: Vec<Complex64> = [-4.0, -1.5, 0.3, 0.8]
            .iter()
            .flat_map(|&re| {
                [-2.0, -0.4, 0.4, 2.0]
                    .iter()
                    .map(move |&im| Complex64::new(re, im))
            })
            .collect();
        for z in grid {
            let v = evaluate(&f, &cx(z.re, z.im), 200, &Ec::zero()).unwrap();
            let v = v.as_finite().expect("finite");
            let s = csqrt(&cx::<f64>(1.0 - z.re, -z.im));
            let prod = s * *v;
            assert!(prod.re > 0.0, "z = {z}");
        }
    }

    #[test]
    fn trace_records_and_shift_relation() {
        let f = GFraction::<f64>::e_p(4).unwrap();
        let tr = trace(&f, &cx(2.0, 0.0), 300, None).unwrap();
        assert_eq!(tr.records.len(), 301);
        for (i, rec) in tr.records.iter().enumerate() {
            assert_eq!(rec.n, i);
        }
        // H_n(z; inf) = H_{n-1}(z; 0): h_n sends inf to 0 (up to the
        // rounding of one projective rescale)
        for n in 1..=300usize {
            assert!(chordal(&tr.records[n].at_inf, &tr.records[n - 1].at_zero) < 1e-14);
        }
    }

    #[test]
    fn trace_with_probe_keeps_conjugate_pair() {
        let f = GFraction::<f64>::e_p(3).unwrap();
        let th = 2.0 * std::f64::consts::PI / 3.0;
        let r = cx(th.cos(), th.sin());
        let tr = trace(&f, &cx(4.0, 0.0), 120, Some(&r)).unwrap();
        let mut saw_probe = false;
        for rec in &tr.records[1..] {
            let p = rec.probe.as_ref().expect("probe from n = 1 on");
            saw_probe = true;
            // exact conjugate symmetry: real z, real coefficients
            assert_eq!(p.at_v, p.at_u.conj());
        }
        assert!(saw_probe);
        assert!(tr.records[0].probe.is_none());
    }
}
