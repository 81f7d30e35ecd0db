//! Development harness: measures the empirical constants frozen in the
//! acceptance suite (first-crossing indices, oscillation censuses, decay
//! thresholds, probe separation floors). Run with --release.

use gfrac::analysis::{general_convergence_probe, paired_min_residuals};
use gfrac::gfraction::{evaluate, runckel_z, trace, GFraction};
use gfrac::mp::Mp128;
use gfrac::real::Real;
use gfrac::schur::{approximant, e_p_params};
use gfrac::sphere::{cx, Cx, ExtendedComplex};

fn residuals_to_one<R: Real>(p: u32, n_max: usize) -> Vec<f64> {
    let theta = R::two() * R::pi() / R::from_int(i64::from(p));
    let r = Cx::new(theta.clone().cos(), theta.sin());
    let z = runckel_z(&r).unwrap();
    let f = GFraction::<R>::e_p(p).unwrap();
    let tr = trace(&f, &Cx::new(z, R::zero()), n_max, None).unwrap();
    let one = Cx::new(1.0, 0.0);
    tr.records.iter().map(|rec| rec.at_zero.euclid_to(&one)).collect()
}

/// First index from which the residual stays below `thr` for good.
fn settle_index(res: &[f64], thr: f64) -> usize {
    let mut last_bad = None;
    for (i, &v) in res.iter().enumerate() {
        if v >= thr {
            last_bad = Some(i);
        }
    }
    last_bad.map_or(0, |i| i + 1)
}

fn main() {
    let n_big = 100_000usize;

    // --- counterexample crossing, p = 3 at z = 4 ---
    let res64 = residuals_to_one::<f64>(3, 20_000);
    let n64 = settle_index(&res64, 1e-3);
    let res128 = residuals_to_one::<Mp128>(3, 20_000);
    let n128 = settle_index(&res128, 1e-3);
    println!("p=3 settle(1e-3): f64 -> {n64}, 128-bit -> {n128}");
    let big = residuals_to_one::<f64>(3, n_big);
    println!("p=3 residual at n=1e5: {:.3e}", big[n_big]);
    let h = n_big / 2;
    for (lo, hi) in [(h, h + h / 4), (h + h / 4, h + h / 2), (h + h / 2, h + 3 * h / 4), (h + 3 * h / 4, n_big)] {
        let m = big[lo..hi].iter().cloned().fold(0.0_f64, f64::max);
        println!("  p=3 block max [{lo},{hi}): {m:.6e}");
    }

    // --- even-p oscillation census, p = 4 at z = 2 ---
    let f4 = GFraction::<f64>::e_p(4).unwrap();
    let tr = trace(&f4, &cx(2.0, 0.0), n_big, None).unwrap();
    let one = cx::<f64>(1.0, 0.0);
    let mone = cx::<f64>(-1.0, 0.0);
    let (mut v1, mut v2) = (0u32, 0u32);
    let mut state = 0u8;
    let mut dist_tail_max = 0.0_f64;
    for (i, rec) in tr.records.iter().enumerate() {
        let d1 = rec.at_zero.euclid_to(&one);
        let d2 = rec.at_zero.euclid_to(&mone);
        let near = if d1 < 5e-2 && d1 <= d2 { 1 } else if d2 < 5e-2 { 2 } else { 0 };
        if near != 0 && near != state {
            if near == 1 { v1 += 1 } else { v2 += 1 }
            state = near;
        }
        if i >= n_big / 2 {
            dist_tail_max = dist_tail_max.max(d1.min(d2));
        }
    }
    println!("p=4 visits(5e-2): near 1: {v1}, near -1: {v2}");
    println!("p=4 trailing-half max dist to limit set: {dist_tail_max:.6e}");

    // --- paired-minimum decay, p = 4 ---
    let m = paired_min_residuals(&f4, &cx(0.0, 1.0), n_big).unwrap();
    let m_tail = m[n_big / 2..].iter().cloned().fold(0.0_f64, f64::max);
    let res4: Vec<f64> = tr.records.iter().map(|rec| rec.at_zero.euclid_to(&one)).collect();
    let r_tail = res4[n_big / 2..].iter().cloned().fold(0.0_f64, f64::max);
    println!("p=4 trailing-half max: paired-min {m_tail:.6e}, raw residual {r_tail:.6e}");

    // --- general-convergence probes ---
    for p in [3u32, 4, 5, 6] {
        let theta = 2.0 * std::f64::consts::PI / f64::from(p);
        let r = cx(theta.cos(), theta.sin());
        let f = GFraction::<f64>::e_p(p).unwrap();
        let g = general_convergence_probe(&f, &r, n_big, 1e-3).unwrap();
        println!(
            "p={p}: alpha residual {:.3e}, sigma floor {:.6}",
            g.residual_alpha, g.sigma_floor
        );
    }

    // --- periodic fraction at the interior point ---
    let fc = GFraction::constant(0.5f64).unwrap();
    let v = evaluate(&fc, &cx(-3.0, 0.0), 200, &ExtendedComplex::zero()).unwrap();
    let d = v.euclid_to(&cx(0.5, 0.0));
    println!("constant g=1/2 at z=-3, n=200: |H - 1/2| = {d:.3e}");

    // --- boundary values of the generating functions ---
    let mut worst = 0.0_f64;
    for p in 1u32..=4 {
        let params: Vec<f64> = e_p_params(p, 400).unwrap();
        for &m in &[0.3, 0.6, 0.8] {
            for k in 0..8 {
                let th = 0.7 * k as f64;
                let w = cx(m * th.cos(), m * th.sin());
                let v = approximant(&w, &params).unwrap();
                let wp = (0..p).fold(cx::<f64>(1.0, 0.0), |acc, _| acc * w);
                let target = (wp + cx(1.0, 0.0)).scale(0.5);
                worst = worst.max(v.euclid_to(&target));
            }
        }
    }
    println!("e_p boundary-value worst residual (n=400, |w|<=0.8): {worst:.3e}");
}
