//! Seeded randomized checks of the algebraic identities the evaluation
//! machinery relies on. The same suite backs the `identities` CLI command
//! and the acceptance tests.
//!
//! Residuals are |lhs - rhs| scaled by the natural O(1)-or-larger magnitude
//! of each identity (chordal distance for the map-level identities), so a
//! passing run means the algebra holds to near roundoff, not merely that two
//! tiny numbers were both tiny.
//!
//! With `corrupt` set, one input coefficient (or one resolved constant, such
//! as the power of r in the reflection identity) is perturbed on one side of
//! every identity. A healthy suite must then fail loudly; this is the
//! negative control showing the checks are not vacuous.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::gfraction::{
    correspondence_map, correspondence_value, evaluate, g_from_schur, runckel_z, tail_probe,
    w_of_z, z_of_w, GFraction,
};
use crate::real::Real;
use crate::schur::{e_p_params, schur_map, BoundaryState};
use crate::sphere::{cabs, cdiv, chordal, Cx, ExtendedComplex};

/// Parameters of one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct IdentitySuiteConfig {
    pub seed: u64,
    pub trials: u32,
    /// Longest parameter list exercised (approximant order).
    pub max_len: usize,
    pub tol: f64,
    /// Negative control: perturb one side of every identity.
    pub corrupt: bool,
}

impl Default for IdentitySuiteConfig {
    fn default() -> Self {
        Self {
            seed: 7,
            trials: 100,
            max_len: 50,
            tol: 1e-10,
            corrupt: false,
        }
    }
}

/// Outcome of one identity across all trials.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub trials: u32,
    pub max_residual: f64,
    pub tol: f64,
    pub pass: bool,
}

impl IdentityCheck {
    fn from_residuals(name: &'static str, cfg: &IdentitySuiteConfig, max_residual: f64) -> Self {
        Self {
            name,
            trials: cfg.trials,
            max_residual,
            tol: cfg.tol,
            pass: max_residual < cfg.tol,
        }
    }
}

/// Run every identity `cfg.trials` times. A zero-trial run passes vacuously.
pub fn run_identity_suite<R: Real>(cfg: &IdentitySuiteConfig) -> Vec<IdentityCheck> {
    vec![
        check_contraction::<R>(cfg),
        check_gap::<R>(cfg),
        check_reflection::<R>(cfg),
        check_tail_transport::<R>(cfg),
        check_unit_tail::<R>(cfg),
        check_correspondence::<R>(cfg),
        check_conformal_roundtrip::<R>(cfg),
    ]
}

pub fn suite_passes(checks: &[IdentityCheck]) -> bool {
    checks.iter().all(|c| c.pass)
}

const BUMP: f64 = 1e-3;

fn rng_for(cfg: &IdentitySuiteConfig, lane: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(lane))
}

fn draw_params(rng: &mut ChaCha8Rng, max_len: usize, min_len: usize) -> Vec<f64> {
    let len = rng.gen_range(min_len..=max_len.max(min_len));
    (0..len).map(|_| rng.gen_range(-0.9..0.9)).collect()
}

fn draw_unimodular<R: Real>(rng: &mut ChaCha8Rng) -> Cx<R> {
    let mut theta = rng.gen_range(0.15..3.0);
    if rng.gen_bool(0.5) {
        theta = -theta;
    }
    let th = R::from_f64(theta);
    Cx::new(th.clone().cos(), th.sin())
}

fn draw_disc_point<R: Real>(rng: &mut ChaCha8Rng) -> Cx<R> {
    let m = rng.gen_range(0.05..0.9);
    let th = rng.gen_range(-3.1..3.1);
    Cx::new(R::from_f64(m * f64::cos(th)), R::from_f64(m * f64::sin(th)))
}

fn lift<R: Real>(v: &[f64]) -> Vec<R> {
    v.iter().map(|&x| R::from_f64(x)).collect()
}

fn boundary_state<R: Real>(t: &[R], r: Cx<R>) -> BoundaryState<R> {
    let mut st = BoundaryState::new(t[0].clone(), r).expect("valid state");
    for ti in &t[1..] {
        st = st.step(ti.clone()).expect("valid step");
    }
    st
}

fn rel_scalar<R: Real>(x: R, y: R) -> f64 {
    let d = (x.clone() - y.clone()).abs();
    (d / R::one().maximum(x.abs()).maximum(y.abs())).to_f64()
}

fn rel_cx<R: Real>(x: &Cx<R>, y: &Cx<R>) -> f64 {
    let d = cabs(&(x.clone() - y.clone()));
    (d / R::one().maximum(cabs(x)).maximum(cabs(y))).to_f64()
}

/// 1 - |C_n/A_n|^2 = P_n / |A_n|^2 on the unit circle.
fn check_contraction<R: Real>(cfg: &IdentitySuiteConfig) -> IdentityCheck {
    let mut rng = rng_for(cfg, 1);
    let mut worst = 0.0_f64;
    for _ in 0..cfg.trials {
        let t: Vec<R> = lift(&draw_params(&mut rng, cfg.max_len, 1));
        let st = boundary_state(&t, draw_unimodular(&mut rng));
        let ratio2 = match cdiv(st.c(), st.a()) {
            ExtendedComplex::Finite(q) => q.norm_sqr(),
            ExtendedComplex::Inf => R::from_f64(f64::INFINITY),
        };
        let mut p = st.product().clone();
        if cfg.corrupt {
            p = p * R::from_f64(1.0 + BUMP);
        }
        let lhs = R::one() - ratio2;
        let rhs = p / st.a().norm_sqr();
        worst = worst.max(rel_scalar(lhs, rhs));
    }
    IdentityCheck::from_residuals("boundary_contraction", cfg, worst)
}

/// C̃_n/Ã_n - C_n/A_n = r^{n+1} P_n / (A_n Ã_n); the modulus consequence
/// |C̃_n/Ã_n - C_n/A_n| = P_n / |A_n Ã_n| is checked alongside.
fn check_gap<R: Real>(cfg: &IdentitySuiteConfig) -> IdentityCheck {
    let mut rng = rng_for(cfg, 2);
    let mut worst = 0.0_f64;
    for _ in 0..cfg.trials {
        let t: Vec<R> = lift(&draw_params(&mut rng, cfg.max_len, 1));
        let st = boundary_state(&t, draw_unimodular(&mut rng));
        let ratio = match cdiv(st.c(), st.a()) {
            ExtendedComplex::Finite(q) => q,
            ExtendedComplex::Inf => continue,
        };
        let modified = match cdiv(&st.c_tilde(), &st.a_tilde()) {
            ExtendedComplex::Finite(q) => q,
            ExtendedComplex::Inf => continue,
        };
        let lhs = modified - ratio;
        let mut phase = st.r_power().clone();
        if cfg.corrupt {
            // drop the phase factor: the raw printed reading
            phase = Cx::new(R::one(), R::zero());
        }
        let den = st.a().clone() * st.a_tilde();
        let rhs = match cdiv(&phase.scale(st.product().clone()), &den) {
            ExtendedComplex::Finite(q) => q,
            ExtendedComplex::Inf => continue,
        };
        worst = worst.max(rel_cx(&lhs, &rhs));
        // modulus form, independent of the phase reading
        let rhs_mod = st.product().clone() / cabs(&den);
        worst = worst.max(rel_scalar(cabs(&lhs), rhs_mod));
    }
    IdentityCheck::from_residuals("boundary_gap", cfg, worst)
}

/// C̃_n = r^{n+1} conj(Ã_n) on the unit circle.
fn check_reflection<R: Real>(cfg: &IdentitySuiteConfig) -> IdentityCheck {
    let mut rng = rng_for(cfg, 3);
    let mut worst = 0.0_f64;
    for _ in 0..cfg.trials {
        let t: Vec<R> = lift(&draw_params(&mut rng, cfg.max_len, 1));
        let r = draw_unimodular(&mut rng);
        let st = boundary_state(&t, r.clone());
        let mut phase = st.r_power().clone();
        if cfg.corrupt {
            // one power short: r^n instead of r^{n+1}
            phase = phase * r.conj();
        }
        let lhs = st.c_tilde();
        let rhs = phase * st.a_tilde().conj();
        let d = cabs(&(lhs - rhs)) / R::one().maximum(cabs(st.a()));
        worst = worst.max(d.to_f64());
    }
    IdentityCheck::from_residuals("boundary_reflection", cfg, worst)
}

/// Transport of an arbitrary tail from the disc to the plane:
/// ((1+w)/(1-w)) (1 - w S_n(w;t))/(1 + w S_n(w;t)) = H_{n+1}(z_of_w(w); l_{n+1}(w;t)).
fn check_tail_transport<R: Real>(cfg: &IdentitySuiteConfig) -> IdentityCheck {
    let mut rng = rng_for(cfg, 4);
    let mut worst = 0.0_f64;
    for _ in 0..cfg.trials {
        let n = rng.gen_range(1..cfg.max_len.max(2));
        let g64: Vec<f64> = (0..=n).map(|_| rng.gen_range(0.05..0.95)).collect();
        let w: Cx<R> = draw_disc_point(&mut rng);
        let t_tail = rng.gen_range(-0.9..0.9);

        let mut g_rhs = g64.clone();
        if cfg.corrupt {
            let j = rng.gen_range(0..g_rhs.len());
            g_rhs[j] = (g_rhs[j] + BUMP).min(0.9999);
        }
        let f_lhs = GFraction::from_coefficients(lift::<R>(&g64)).expect("valid g");
        let f_rhs = GFraction::from_coefficients(lift::<R>(&g_rhs)).expect("valid g");

        // Schur parameters of the left side come from the uncorrupted list
        let t_params = f_lhs.schur_params(n + 1).expect("params");
        let s_map = schur_map(&w, &t_params).expect("schur map");
        let s_val = s_map.apply(&ExtendedComplex::Finite(Cx::new(
            R::from_f64(t_tail),
            R::zero(),
        )));
        let lhs = correspondence_map(&w).expect("transport").apply(&s_val);

        let z = match z_of_w(&w) {
            ExtendedComplex::Finite(z) => z,
            ExtendedComplex::Inf => continue,
        };
        let u = tail_probe(&f_rhs, n, &w, &R::from_f64(t_tail)).expect("probe");
        let rhs = evaluate(&f_rhs, &z, n + 1, &u).expect("evaluate");
        worst = worst.max(chordal(&lhs, &rhs).to_f64());
    }
    IdentityCheck::from_residuals("tail_transport", cfg, worst)
}

/// Closing the sequence with a final parameter 1:
/// ((1+r)/(1-r)) (1 - r [r;t_0..t_n,1])/(1 + r [r;t_0..t_n,1]) = H_{n+1}(z_r; 0).
fn check_unit_tail<R: Real>(cfg: &IdentitySuiteConfig) -> IdentityCheck {
    let mut rng = rng_for(cfg, 5);
    let mut worst = 0.0_f64;
    for _ in 0..cfg.trials {
        let p = rng.gen_range(3u32..=8);
        let n = rng.gen_range(1..cfg.max_len.max(2));
        let theta = R::two() * R::pi() / R::from_int(i64::from(p));
        let r = Cx::new(theta.clone().cos(), theta.sin());
        let params: Vec<R> = e_p_params(p, n + 1).expect("params");
        let st = boundary_state(&params, r.clone());
        let modified = st.modified_approximant();
        let lhs = correspondence_map(&r).expect("transport").apply(&modified);

        let z_r = runckel_z(&r).expect("image");
        let f = if cfg.corrupt {
            let mut bumped: Vec<R> = params.clone();
            bumped[0] = bumped[0].clone() + R::from_f64(BUMP);
            // extend so g_{n+2} exists
            bumped.push(R::zero());
            bumped.push(R::zero());
            g_from_schur(&bumped).expect("fraction")
        } else {
            GFraction::e_p(p).expect("fraction")
        };
        let rhs = evaluate(&f, &Cx::new(z_r, R::zero()), n + 1, &ExtendedComplex::zero())
            .expect("evaluate");
        worst = worst.max(chordal(&lhs, &rhs).to_f64());
    }
    IdentityCheck::from_residuals("unit_tail", cfg, worst)
}

/// Finite form of the class correspondence: the transported disc approximant
/// equals the plane approximant probed at the matching tail,
/// ((1+w)/(1-w)) (1 - w E_n)/(1 + w E_n) = H_n(z_of_w(w); l_n(w; t_n)).
fn check_correspondence<R: Real>(cfg: &IdentitySuiteConfig) -> IdentityCheck {
    let mut rng = rng_for(cfg, 6);
    let mut worst = 0.0_f64;
    for _ in 0..cfg.trials {
        let n = rng.gen_range(1..cfg.max_len.max(2));
        let t64 = draw_params(&mut rng, n + 1, n + 1);
        let w: Cx<R> = draw_disc_point(&mut rng);
        let t: Vec<R> = lift(&t64);
        let lhs = correspondence_value(&t, &w).expect("disc side");

        let mut t_rhs = t64.clone();
        if cfg.corrupt {
            let j = rng.gen_range(0..t_rhs.len());
            t_rhs[j] += BUMP;
        }
        let f = g_from_schur(&lift::<R>(&t_rhs)).expect("fraction");
        let z = match z_of_w(&w) {
            ExtendedComplex::Finite(z) => z,
            ExtendedComplex::Inf => continue,
        };
        let u = tail_probe(&f, n - 1, &w, &t[n]).expect("probe");
        let rhs = evaluate(&f, &z, n, &u).expect("evaluate");
        worst = worst.max(chordal(&lhs, &rhs).to_f64());
    }
    IdentityCheck::from_residuals("correspondence", cfg, worst)
}

/// z -> w -> z across the cut plane, w -> z -> w across the disc, and the
/// closed singular-line image against the conformal one.
fn check_conformal_roundtrip<R: Real>(cfg: &IdentitySuiteConfig) -> IdentityCheck {
    let mut rng = rng_for(cfg, 7);
    let mut worst = 0.0_f64;
    for _ in 0..cfg.trials {
        let re = rng.gen_range(-8.0..1.5);
        let mut im = rng.gen_range(-5.0..5.0);
        if re > 0.9 && im.abs() < 0.1 {
            im += 0.2;
        }
        let z: Cx<R> = Cx::new(R::from_f64(re), R::from_f64(im));
        let mut w = w_of_z(&z);
        if cfg.corrupt {
            w = w.scale(R::from_f64(1.0 + BUMP));
        }
        match z_of_w(&w) {
            ExtendedComplex::Finite(back) => worst = worst.max(rel_cx(&back, &z)),
            ExtendedComplex::Inf => worst = worst.max(1.0),
        }

        let wd: Cx<R> = draw_disc_point(&mut rng);
        if let ExtendedComplex::Finite(zd) = z_of_w(&wd) {
            let back = w_of_z(&zd);
            worst = worst.max(rel_cx(&back, &wd));
        }

        let r: Cx<R> = draw_unimodular(&mut rng);
        let closed = runckel_z(&r).expect("admissible");
        if let ExtendedComplex::Finite(conf) = z_of_w(&r) {
            worst = worst.max(rel_cx(&conf, &Cx::new(closed, R::zero())));
        }
    }
    IdentityCheck::from_residuals("conformal_roundtrip", cfg, worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_on_healthy_configuration() {
        let cfg = IdentitySuiteConfig {
            trials: 25,
            ..Default::default()
        };
        let checks = run_identity_suite::<f64>(&cfg);
        assert_eq!(checks.len(), 7);
        for c in &checks {
            assert!(c.pass, "{}: residual {}", c.name, c.max_residual);
        }
        assert!(suite_passes(&checks));
    }

    #[test]
    fn suite_is_deterministic_for_a_seed() {
        let cfg = IdentitySuiteConfig {
            trials: 10,
            seed: 123,
            ..Default::default()
        };
        let a = run_identity_suite::<f64>(&cfg);
        let b = run_identity_suite::<f64>(&cfg);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.max_residual.to_bits(), y.max_residual.to_bits());
        }
    }

    #[test]
    fn zero_trials_pass_vacuously() {
        let cfg = IdentitySuiteConfig {
            trials: 0,
            ..Default::default()
        };
        assert!(suite_passes(&run_identity_suite::<f64>(&cfg)));
    }

    #[test]
    fn corruption_is_detected_everywhere() {
        let cfg = IdentitySuiteConfig {
            trials: 10,
            corrupt: true,
            ..Default::default()
        };
        let checks = run_identity_suite::<f64>(&cfg);
        for c in &checks {
            assert!(!c.pass, "{} failed to detect corruption", c.name);
        }
    }

    #[test]
    fn suite_holds_at_extended_precision() {
        use crate::mp::Mp128;
        let cfg = IdentitySuiteConfig {
            trials: 3,
            max_len: 16,
            tol: 1e-10,
            ..Default::default()
        };
        let checks = run_identity_suite::<Mp128>(&cfg);
        for c in &checks {
            assert!(c.pass, "{}: residual {}", c.name, c.max_residual);
        }
    }
}
