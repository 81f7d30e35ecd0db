//! Convergence classification at Runckel points.
//!
//! For a g-fraction with real coefficients and a unimodular point r != ±1,
//! the approximants H_n(z_r; ·) at the image z_r = 2/(1 + Re r) on the
//! singular line can behave three ways within a finite horizon:
//!
//! - classically convergent: the 0-tail and ∞-tail sequences stabilize to a
//!   common value;
//! - generally convergent only: the conjugate probe tails u_n, v_n yield a
//!   common limit while staying uniformly separated in the chordal metric,
//!   but the 0-tail does not settle;
//! - oscillatory: the 0-tail keeps alternating between neighborhoods of the
//!   two limit-set points {1, ((1+r)/(1-r))^2}.
//!
//! Stabilization is measured with the chordal metric over a trailing window
//! (so limits at ∞ are handled); distances to the limit-set points are
//! Euclidean. "Infinitely often" is operationalized as a minimum number of
//! alternations within the horizon, and liminf σ(u_n, v_n) as the minimum
//! over the trailing half. `Undecided` is a first-class verdict: a finite
//! horizon cannot certify divergence.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gfraction::{runckel_z, trace, ApproximantTrace, GFraction};
use crate::real::Real;
use crate::schur::{runckel_check, SchurSeq};
use crate::sphere::{cdiv, chordal, Cx, ExtendedComplex};
use crate::DEFAULT_WINDOW;

/// Convergence verdict over a finite horizon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    ClassicalConvergent,
    GenerallyConvergentOnly,
    Oscillatory,
    Undecided,
}

/// Tunables for [`classify`].
#[derive(Clone, Debug, Serialize)]
pub struct ClassifyConfig {
    /// Evaluation horizon; at least 1000.
    pub n_max: usize,
    /// Limit-detection tolerance for the trailing-window tests.
    pub tol: f64,
    /// Trailing-window length.
    pub window: usize,
    /// Euclidean proximity that counts as "visiting" a limit-set point.
    /// Separate from `tol`: the oscillatory subsequence approaches the
    /// second point at a slow 1/n-type rate.
    pub osc_proximity: f64,
    /// Alternations between the two limit-set points required for the
    /// `Oscillatory` verdict (finite-horizon proxy for "infinitely often").
    pub min_alternations: u32,
    /// Lower bound demanded of the liminf estimate of σ(u_n, v_n).
    pub sigma_delta: f64,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        Self {
            n_max: 100_000,
            tol: 1e-3,
            window: DEFAULT_WINDOW,
            osc_proximity: 5e-2,
            min_alternations: 10,
            sigma_delta: 0.05,
        }
    }
}

impl ClassifyConfig {
    pub fn with_horizon(n_max: usize) -> Self {
        Self {
            n_max,
            ..Self::default()
        }
    }
}

/// Numbers backing a verdict.
#[derive(Clone, Debug, Serialize)]
pub struct Diagnostics {
    /// Boundary runs (r supplied): Euclidean distance of the final 0-tail
    /// value from 1. Otherwise: trailing-window chordal spread of the
    /// 0-tail sequence around its final value.
    pub final_residual: f64,
    /// Trailing-half maximum of min(|H_n - 1|, |H_{n+1} - 1|); boundary runs only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair_min_residual: Option<f64>,
    /// Trailing-half minimum of σ(u_n, v_n); probe runs only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma_liminf: Option<f64>,
    /// Last trace index actually evaluated.
    pub n_used: usize,
    /// Alternations between limit-set neighborhoods seen in the 0-tail.
    pub alternations: u32,
    /// Entries into the neighborhoods of the first and second limit-set point.
    pub visits: (u32, u32),
    /// Step at which composition ran out of significance, if it did.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degenerate_at: Option<usize>,
}

/// Verdict, detected limit data, and diagnostics for one run.
#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceReport {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit: Option<ExtendedComplex<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit_set: Option<(ExtendedComplex<f64>, ExtendedComplex<f64>)>,
    pub diagnostics: Diagnostics,
}

/// Report plus the trace it was computed from.
#[derive(Clone, Debug, Serialize)]
pub struct ClassifyOutcome {
    pub report: ConvergenceReport,
    pub trace: ApproximantTrace,
}

/// The two possible limit points of H_n(z_r; 0): {1, ((1+r)/(1-r))^2}.
/// Requires |r| = 1, r != ±1 (the second point degenerates at ±1).
pub fn limit_set<R: Real>(r: &Cx<R>) -> Result<(Cx<R>, Cx<R>)> {
    // reuse the admissibility validation of the conformal image
    runckel_z(r)?;
    let one = Cx::new(R::one(), R::zero());
    let q = match cdiv(&(one.clone() + r.clone()), &(one.clone() - r.clone())) {
        ExtendedComplex::Finite(q) => q,
        ExtendedComplex::Inf => unreachable!("r = 1 is excluded"),
    };
    Ok((one, q.clone() * q))
}

fn euclid(x: &ExtendedComplex<f64>, target: &Cx<f64>) -> f64 {
    x.euclid_to(target)
}

/// Classify the convergence behavior of `f` at the real point `z` over the
/// horizon in `cfg`, collecting H_n(z; 0), H_n(z; ∞) and, when the boundary
/// point `r` is supplied, the conjugate probe values H_n(z; u_n), H_n(z; v_n).
///
/// With `r` supplied, `z` must equal its conformal image runckel_z(r).
/// Composition degeneracy within the horizon is not an error: by then the
/// approximants have collapsed onto their limit at working precision, so the
/// trace is truncated there and analysis proceeds.
pub fn classify<R: Real>(
    f: &GFraction<R>,
    z: R,
    r: Option<&Cx<R>>,
    cfg: &ClassifyConfig,
) -> Result<ClassifyOutcome> {
    if cfg.n_max < 1000 {
        return Err(Error::InvalidArgument(format!(
            "classification horizon n_max = {} is below the minimum 1000",
            cfg.n_max
        )));
    }
    if cfg.tol <= 0.0 || cfg.tol.is_nan() || cfg.window < 2 {
        return Err(Error::InvalidArgument(
            "tolerance must be positive and the window at least 2".into(),
        ));
    }
    let set = match r {
        Some(r) => {
            let z_r = runckel_z(r)?;
            let dz = (z.clone() - z_r.clone()).abs().to_f64();
            if dz > 1e-9 * z_r.to_f64().abs().max(1.0) {
                return Err(Error::InconsistentPair {
                    z: z.to_f64(),
                    z_r: z_r.to_f64(),
                });
            }
            let (p1, p2) = limit_set(r)?;
            Some((
                Cx::new(p1.re.to_f64(), p1.im.to_f64()),
                Cx::new(p2.re.to_f64(), p2.im.to_f64()),
            ))
        }
        None => None,
    };

    let tr = trace(f, &Cx::new(z, R::zero()), cfg.n_max, r)?;
    let report = assess(&tr, set.as_ref(), cfg);
    Ok(ClassifyOutcome { report, trace: tr })
}

fn assess(
    tr: &ApproximantTrace,
    set: Option<&(Cx<f64>, Cx<f64>)>,
    cfg: &ClassifyConfig,
) -> ConvergenceReport {
    let recs = &tr.records;
    let n_used = tr.last_index();
    let window = cfg.window.min(recs.len());
    let tail = &recs[recs.len() - window..];

    let last0 = recs[n_used].at_zero.clone();
    let lastinf = recs[n_used].at_inf.clone();
    let zero_spread = tail
        .iter()
        .map(|rec| chordal(&rec.at_zero, &last0))
        .fold(0.0_f64, f64::max);
    let inf_spread = tail
        .iter()
        .map(|rec| chordal(&rec.at_inf, &lastinf))
        .fold(0.0_f64, f64::max);
    let classical =
        zero_spread < cfg.tol && inf_spread < cfg.tol && chordal(&last0, &lastinf) < cfg.tol;

    // oscillation census over the whole horizon
    let mut alternations = 0u32;
    let mut visits = (0u32, 0u32);
    if let Some((p1, p2)) = set {
        let mut state: Option<u8> = None;
        for rec in recs {
            let d1 = euclid(&rec.at_zero, p1);
            let d2 = euclid(&rec.at_zero, p2);
            let near = if d1 < cfg.osc_proximity && d1 <= d2 {
                Some(1u8)
            } else if d2 < cfg.osc_proximity {
                Some(2u8)
            } else {
                None
            };
            if let Some(which) = near {
                if state != Some(which) {
                    if which == 1 {
                        visits.0 += 1;
                    } else {
                        visits.1 += 1;
                    }
                    if state.is_some() {
                        alternations += 1;
                    }
                    state = Some(which);
                }
            }
        }
    }
    let oscillatory = alternations >= cfg.min_alternations;

    // probe assessment
    let probes: Vec<_> = recs.iter().filter_map(|rec| rec.probe.as_ref()).collect();
    let mut sigma_liminf = None;
    let mut general = false;
    let mut alpha = None;
    if probes.len() >= window {
        let last_u = probes[probes.len() - 1].at_u.clone();
        let last_v = probes[probes.len() - 1].at_v.clone();
        let ptail = &probes[probes.len() - window..];
        let u_spread = ptail
            .iter()
            .map(|p| chordal(&p.at_u, &last_u))
            .fold(0.0_f64, f64::max);
        let v_spread = ptail
            .iter()
            .map(|p| chordal(&p.at_v, &last_v))
            .fold(0.0_f64, f64::max);
        let sep = probes[probes.len() / 2..]
            .iter()
            .map(|p| chordal(&p.u, &p.u.conj()))
            .fold(f64::INFINITY, f64::min);
        sigma_liminf = Some(sep);
        general = u_spread < cfg.tol
            && v_spread < cfg.tol
            && chordal(&last_u, &last_v) < cfg.tol
            && sep > cfg.sigma_delta;
        if general {
            alpha = Some(last_u);
        }
    }

    let (verdict, limit) = if classical {
        (Verdict::ClassicalConvergent, Some(last0.clone()))
    } else if oscillatory {
        (Verdict::Oscillatory, None)
    } else if general {
        (Verdict::GenerallyConvergentOnly, alpha)
    } else {
        (Verdict::Undecided, None)
    };

    let one = Cx::new(1.0, 0.0);
    let final_residual = if set.is_some() {
        euclid(&last0, &one)
    } else {
        zero_spread
    };
    let pair_min_residual = set.map(|_| {
        let res: Vec<f64> = recs.iter().map(|rec| euclid(&rec.at_zero, &one)).collect();
        let m = paired_min(&res);
        m[m.len() / 2..].iter().cloned().fold(0.0_f64, f64::max)
    });

    ConvergenceReport {
        verdict,
        limit,
        limit_set: set.map(|(p1, p2)| {
            (ExtendedComplex::Finite(*p1), ExtendedComplex::Finite(*p2))
        }),
        diagnostics: Diagnostics {
            final_residual,
            pair_min_residual,
            sigma_liminf,
            n_used,
            alternations,
            visits,
            degenerate_at: tr.degenerate_at,
        },
    }
}

fn paired_min(res: &[f64]) -> Vec<f64> {
    res.windows(2).map(|w| w[0].min(w[1])).collect()
}

/// The paired-minimum sequence m_n = min(|H_n(z_r; 0) - 1|, |H_{n+1}(z_r; 0) - 1|)
/// for n = 0..n_max-1. Its tail decays even when the raw residual does not
/// (even-period oscillation), because consecutive approximants cannot both
/// sit near the second limit point.
pub fn paired_min_residuals<R: Real>(
    f: &GFraction<R>,
    r: &Cx<R>,
    n_max: usize,
) -> Result<Vec<f64>> {
    let z_r = runckel_z(r)?;
    let tr = trace(f, &Cx::new(z_r, R::zero()), n_max, None)?;
    let one = Cx::new(1.0, 0.0);
    let res: Vec<f64> = tr
        .records
        .iter()
        .map(|rec| euclid(&rec.at_zero, &one))
        .collect();
    Ok(paired_min(&res))
}

/// Outcome of the conjugate-pair probe: the common limit of H_n(z_r; u_n)
/// and H_n(z_r; v_n), and the measured separation floor of the tails.
#[derive(Clone, Debug, Serialize)]
pub struct GeneralConvergence {
    pub alpha: ExtendedComplex<f64>,
    /// min over the trailing half of σ(u_n, v_n); positive separation is
    /// what makes the probe pair a valid witness.
    pub sigma_floor: f64,
    /// |alpha - 1|.
    pub residual_alpha: f64,
}

/// Drive the probe tails u_n = l_n(r; t_n), v_n = conj(u_n) through one
/// evaluation pass and extract their common limit.
///
/// Checks first (via [`runckel_check`]) that the Schur parameters of `f`
/// actually have a Runckel point at `r`; errors if not, or if the probe
/// sequences fail to stabilize, or if their limit is not 1 within `tol`.
pub fn general_convergence_probe<R: Real>(
    f: &GFraction<R>,
    r: &Cx<R>,
    n_max: usize,
    tol: f64,
) -> Result<GeneralConvergence> {
    let z_r = runckel_z(r)?;
    let params = f.schur_params(n_max + 1)?;
    let seq = SchurSeq::finite(params)?;
    let chk = runckel_check(&seq, r, n_max, tol)?;
    if !chk.is_runckel {
        return Err(Error::InvalidArgument(format!(
            "r = ({}, {}) is not a Runckel point of this fraction at tolerance {tol}",
            r.re.to_f64(),
            r.im.to_f64()
        )));
    }

    let tr = trace(f, &Cx::new(z_r, R::zero()), n_max, Some(r))?;
    let probes: Vec<_> = tr
        .records
        .iter()
        .filter_map(|rec| rec.probe.as_ref())
        .collect();
    let window = DEFAULT_WINDOW.min(probes.len());
    if window < 2 {
        return Err(Error::InvalidArgument(
            "horizon too short for the probe window".into(),
        ));
    }
    let last_u = probes[probes.len() - 1].at_u.clone();
    let last_v = probes[probes.len() - 1].at_v.clone();
    let ptail = &probes[probes.len() - window..];
    let residual_u = ptail
        .iter()
        .map(|p| chordal(&p.at_u, &last_u))
        .fold(0.0_f64, f64::max);
    let residual_v = ptail
        .iter()
        .map(|p| chordal(&p.at_v, &last_v))
        .fold(0.0_f64, f64::max);
    let one = Cx::new(1.0, 0.0);
    let residual_alpha = euclid(&last_u, &one);
    if residual_u >= tol || residual_v >= tol || chordal(&last_u, &last_v) >= tol {
        return Err(Error::ProbeUnstable {
            n: tr.last_index(),
            residual_u,
            residual_v,
        });
    }
    if residual_alpha >= tol {
        return Err(Error::ProbeUnstable {
            n: tr.last_index(),
            residual_u: residual_alpha,
            residual_v: residual_alpha,
        });
    }
    let sigma_floor = probes[probes.len() / 2..]
        .iter()
        .map(|p| chordal(&p.u, &p.u.conj()))
        .fold(f64::INFINITY, f64::min);
    Ok(GeneralConvergence {
        alpha: last_u,
        sigma_floor,
        residual_alpha,
    })
}

/// Check that the partial numerators go limit-periodic: b_i z_p -> z_p/4,
/// which exceeds the classical 1/4 divergence bound.
#[derive(Clone, Debug, Serialize)]
pub struct LimitPeriodicCheck {
    /// z_p / 4.
    pub target: f64,
    /// |b_i z_p - z_p/4| at the probe index.
    pub residual: f64,
    pub probe_index: usize,
    /// target > 1/4, the hypothesis of the divergence conjecture.
    pub exceeds_quarter: bool,
}

/// Full record of one counterexample run for the period-p fraction at its
/// singular-line point z_p = sec²(π/p).
#[derive(Clone, Debug, Serialize)]
pub struct RamanujanOutcome {
    pub p: u32,
    pub z_p: f64,
    pub limit_periodic: LimitPeriodicCheck,
    pub report: ConvergenceReport,
    pub trace: ApproximantTrace,
}

/// Build the period-p fraction, place it at z_p = sec²(π/p) > 1, verify the
/// limit-periodic hypothesis lim b_i z_p = z_p/4 > 1/4, and classify.
///
/// For odd p the run converges classically to 1 — while the classical theory
/// of limit-periodic fractions with limit numerator above 1/4 predicted
/// divergence. For even p it oscillates between the two limit-set points.
/// Requires p >= 2; p = 2 itself is rejected because its boundary point is
/// r = -1, which is excluded.
pub fn ramanujan_experiment<R: Real>(p: u32, cfg: &ClassifyConfig) -> Result<RamanujanOutcome> {
    if p < 2 {
        return Err(Error::InvalidArgument(
            "the counterexample family needs p >= 2".into(),
        ));
    }
    let theta = R::two() * R::pi() / R::from_int(i64::from(p));
    let r = Cx::new(theta.clone().cos(), theta.sin());
    let z_p = runckel_z(&r)?;
    let f = GFraction::<R>::e_p(p)?;

    // limit-periodic check at a deep index of the special subsequence
    let k = 4000usize;
    let i = 1 + p as usize * k;
    let b_zp = (f.b(i)? * z_p.clone()).to_f64();
    let target = z_p.to_f64() / 4.0;
    let limit_periodic = LimitPeriodicCheck {
        target,
        residual: (b_zp - target).abs(),
        probe_index: i,
        exceeds_quarter: target > 0.25,
    };

    let outcome = classify(&f, z_p.clone(), Some(&r), cfg)?;
    Ok(RamanujanOutcome {
        p,
        z_p: z_p.to_f64(),
        limit_periodic,
        report: outcome.report,
        trace: outcome.trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::cx;

    fn unit(theta: f64) -> Cx<f64> {
        Cx::new(theta.cos(), theta.sin())
    }

    fn omega() -> Cx<f64> {
        unit(2.0 * std::f64::consts::PI / 3.0)
    }

    #[test]
    fn limit_set_values() {
        let (p1, p2) = limit_set(&cx::<f64>(0.0, 1.0)).unwrap();
        assert_eq!(p1, cx(1.0, 0.0));
        assert!((p2.re + 1.0).abs() < 1e-12 && p2.im.abs() < 1e-12);

        let (p1, p2) = limit_set(&omega()).unwrap();
        assert_eq!(p1, cx(1.0, 0.0));
        assert!((p2.re + 1.0 / 3.0).abs() < 1e-12 && p2.im.abs() < 1e-12);

        assert!(limit_set(&cx::<f64>(1.0, 0.0)).is_err());
        assert!(limit_set(&cx::<f64>(-1.0, 0.0)).is_err());
    }

    #[test]
    fn classify_odd_period_is_classical() {
        let f = GFraction::<f64>::e_p(3).unwrap();
        let cfg = ClassifyConfig::with_horizon(2000);
        let out = classify(&f, 4.0, Some(&omega()), &cfg).unwrap();
        assert_eq!(out.report.verdict, Verdict::ClassicalConvergent);
        let lim = out.report.limit.unwrap();
        assert!(lim.euclid_to(&cx(1.0, 0.0)) < 1e-3);
        assert!(out.report.diagnostics.final_residual < 1e-3);
    }

    #[test]
    fn classify_even_period_oscillates() {
        let f = GFraction::<f64>::e_p(4).unwrap();
        let cfg = ClassifyConfig::with_horizon(2000);
        let out = classify(&f, 2.0, Some(&cx(0.0, 1.0)), &cfg).unwrap();
        assert_eq!(out.report.verdict, Verdict::Oscillatory);
        let (p1, p2) = out.report.limit_set.unwrap();
        assert_eq!(p1, ExtendedComplex::from_f64_parts(1.0, 0.0));
        if let ExtendedComplex::Finite(p2) = p2 {
            assert!((p2.re + 1.0).abs() < 1e-12);
        } else {
            panic!("finite limit point expected");
        }
        assert!(out.report.diagnostics.alternations >= 10);
        assert!(out.report.diagnostics.visits.0 >= 10 && out.report.diagnostics.visits.1 >= 10);
    }

    #[test]
    fn classify_interior_point_with_early_degeneracy() {
        // exponentially convergent run: doubles degenerate near step 650,
        // classification still resolves on the truncated trace
        let f = GFraction::constant(0.5f64).unwrap();
        let out = classify(&f, -3.0, None, &ClassifyConfig::with_horizon(1000)).unwrap();
        assert_eq!(out.report.verdict, Verdict::ClassicalConvergent);
        let lim = out.report.limit.unwrap();
        assert!(lim.euclid_to(&cx(0.5, 0.0)) < 1e-9);
        assert!(out.report.diagnostics.degenerate_at.is_some());
        assert!(out.report.limit_set.is_none());
    }

    #[test]
    fn classify_validates_inputs() {
        let f = GFraction::<f64>::e_p(3).unwrap();
        assert!(matches!(
            classify(&f, 3.0, Some(&omega()), &ClassifyConfig::with_horizon(2000)),
            Err(Error::InconsistentPair { .. })
        ));
        assert!(matches!(
            classify(&f, 4.0, Some(&omega()), &ClassifyConfig::with_horizon(10)),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn paired_min_bounded_by_residual() {
        let f = GFraction::<f64>::e_p(3).unwrap();
        let m = paired_min_residuals(&f, &omega(), 800).unwrap();
        assert_eq!(m.len(), 800);
        // m_n <= |H_n - 1| by construction; the tail decays
        let tail_max = m[400..].iter().cloned().fold(0.0_f64, f64::max);
        assert!(tail_max < 1e-4, "tail max {tail_max}");
    }

    #[test]
    fn paired_min_decays_even_when_residual_does_not() {
        let f = GFraction::<f64>::e_p(4).unwrap();
        let n_max = 4000;
        let m = paired_min_residuals(&f, &cx(0.0, 1.0), n_max).unwrap();
        let tail_m = m[n_max / 2..].iter().cloned().fold(0.0_f64, f64::max);
        // raw residual keeps returning to |−1 − 1| = 2
        assert!(tail_m < 1e-2, "paired-min tail {tail_m}");
    }

    #[test]
    fn probe_pair_converges_for_both_parities() {
        for (p, theta) in [
            (3u32, 2.0 * std::f64::consts::PI / 3.0),
            (4, 0.5 * std::f64::consts::PI),
        ] {
            let f = GFraction::<f64>::e_p(p).unwrap();
            let g = general_convergence_probe(&f, &unit(theta), 4000, 1e-2).unwrap();
            assert!(g.residual_alpha < 1e-2, "p = {p}");
            assert!(g.sigma_floor > 0.5, "p = {p}: sigma {}", g.sigma_floor);
        }
    }

    #[test]
    fn probe_rejects_non_runckel_sequences() {
        // constant g = 1/2 has all Schur parameters zero: e ≡ 0, not 1
        let f = GFraction::constant(0.5f64).unwrap();
        assert!(general_convergence_probe(&f, &omega(), 2000, 1e-3).is_err());
    }

    #[test]
    fn counterexample_runs() {
        let cfg = ClassifyConfig::with_horizon(3000);
        let out = ramanujan_experiment::<f64>(3, &cfg).unwrap();
        assert!((out.z_p - 4.0).abs() < 1e-12);
        assert!(out.limit_periodic.exceeds_quarter);
        assert!(out.limit_periodic.residual < 1e-3);
        assert_eq!(out.report.verdict, Verdict::ClassicalConvergent);

        let out = ramanujan_experiment::<f64>(4, &cfg).unwrap();
        assert!((out.z_p - 2.0).abs() < 1e-12);
        assert_eq!(out.report.verdict, Verdict::Oscillatory);

        // every odd period converges classically
        let out = ramanujan_experiment::<f64>(5, &cfg).unwrap();
        let sec2 = 1.0 / (std::f64::consts::PI / 5.0).cos().powi(2);
        assert!((out.z_p - sec2).abs() < 1e-12);
        assert_eq!(out.report.verdict, Verdict::ClassicalConvergent);
        assert!(out.report.limit.unwrap().euclid_to(&cx(1.0, 0.0)) < 1e-3);

        assert!(ramanujan_experiment::<f64>(1, &cfg).is_err());
        // p = 2 collides with the excluded boundary point r = -1
        assert!(matches!(
            ramanujan_experiment::<f64>(2, &cfg),
            Err(Error::ExcludedBoundaryPoint { .. })
        ));
    }
}
