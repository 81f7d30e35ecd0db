//! Command-line front end: evaluates g-fraction approximant traces, runs the
//! limit-periodic counterexample experiment, checks Runckel points, and
//! drives the randomized identity suite. Emits CSV or JSON with the resolved
//! configuration embedded; identical configuration (and seed) produces
//! byte-identical output.
//!
//! Exit codes: 0 success, 1 failed checks (identity suite), 2 invalid
//! configuration, 3 precision exhaustion (retry with `--precision 128`).

mod output;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use gfrac::analysis::{
    general_convergence_probe, ramanujan_experiment, ClassifyConfig, ConvergenceReport,
    GeneralConvergence, LimitPeriodicCheck,
};
use gfrac::gfraction::{runckel_z, trace, GFraction};
use gfrac::identities::{run_identity_suite, suite_passes, IdentityCheck, IdentitySuiteConfig};
use gfrac::mp::{Mp128, Mp256};
use gfrac::schur::{runckel_check, SchurSeq};
use gfrac::sphere::chordal;
use gfrac::{Cx, ExtendedComplex, Real};

use output::{csv_preamble, num, point_cells, render_json, Document, Format, Sink};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_PRECISION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "gfrac",
    version,
    about = "Stieltjes g-fraction and Schur approximant evaluation with convergence diagnostics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate H_n(z; 0) and H_n(z; inf) for n = 0..n-max and emit the trace
    Eval(EvalArgs),
    /// Run the limit-periodic counterexample experiment for period p
    Ramanujan(RamanujanArgs),
    /// Run the seeded randomized identity suite (nonzero exit on failure)
    Identities(IdentityArgs),
    /// Check a boundary Runckel point and run the general-convergence probe
    Runckel(RunckelArgs),
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Evaluation horizon
    #[arg(long = "n-max", default_value_t = 100_000)]
    n_max: usize,
    /// Limit-detection tolerance
    #[arg(long, default_value_t = 1e-3)]
    tol: f64,
    /// Working precision in mantissa bits: 53, 128 or 256
    #[arg(long, default_value_t = 53)]
    precision: u32,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output path (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct SourceArgs {
    /// Coefficients from the period-p generating function (1 + w^p)/2
    #[arg(long)]
    p: Option<u32>,
    /// Constant coefficient g in (0, 1)
    #[arg(long = "constant-g")]
    constant_g: Option<f64>,
    /// Explicit comma-separated coefficients g_1,g_2,... in (0, 1)
    #[arg(long, value_delimiter = ',')]
    g: Option<Vec<f64>>,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Real part of the evaluation point z
    #[arg(long, allow_hyphen_values = true)]
    z: f64,
    /// Imaginary part of z
    #[arg(long = "z-im", default_value_t = 0.0, allow_hyphen_values = true)]
    z_im: f64,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct RamanujanArgs {
    /// Period of the generating function; odd p >= 3 converges, even p oscillates
    #[arg(long)]
    p: u32,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct IdentityArgs {
    /// RNG seed; identical seeds give byte-identical output
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Trials per identity (0 passes vacuously)
    #[arg(long, default_value_t = 100)]
    trials: u32,
    /// Longest parameter list exercised
    #[arg(long = "max-len", default_value_t = 50)]
    max_len: usize,
    /// Perturb one side of every identity (negative control; must fail)
    #[arg(long)]
    corrupt: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct RunckelArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Boundary point angle in radians (r = e^{i theta}); defaults to 2 pi / p
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<f64>,
    #[command(flatten)]
    common: CommonArgs,
}

/// Echo of every setting a run actually used; embedded in all output files.
#[derive(Serialize)]
pub struct ResolvedConfig {
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    constant_g: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    g: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    z: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    theta: Option<f64>,
    n_max: usize,
    tol: f64,
    precision_bits: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trials: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    corrupt: Option<bool>,
    format: Format,
    #[serde(skip_serializing_if = "Option::is_none")]
    output: Option<String>,
}

impl ResolvedConfig {
    fn new(command: &'static str, common: &CommonArgs) -> Self {
        Self {
            command,
            p: None,
            constant_g: None,
            g: None,
            z: None,
            theta: None,
            n_max: common.n_max,
            tol: common.tol,
            precision_bits: common.precision,
            seed: None,
            trials: None,
            corrupt: None,
            format: common.format,
            output: common.output.as_ref().map(|p| p.display().to_string()),
        }
    }

    fn with_source(mut self, src: &SourceArgs) -> Self {
        self.p = src.p;
        self.constant_g = src.constant_g;
        self.g = src.g.clone();
        self
    }
}

enum CliError {
    Core(gfrac::Error),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Core(e) => write!(f, "{e}"),
            Self::Io(e) => write!(f, "i/o: {e}"),
        }
    }
}

impl From<gfrac::Error> for CliError {
    fn from(e: gfrac::Error) -> Self {
        Self::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::Io(e)
    }
}

fn exit_code_for(e: &CliError) -> u8 {
    match e {
        CliError::Core(gfrac::Error::DegenerateComposition { .. }) => {
            eprintln!("hint: retry with --precision 128 (or 256)");
            EXIT_PRECISION
        }
        _ => EXIT_CONFIG,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval(args) => with_precision(args.common.precision, |p| match p {
            Bits::B53 => cmd_eval::<f64>(args),
            Bits::B128 => cmd_eval::<Mp128>(args),
            Bits::B256 => cmd_eval::<Mp256>(args),
        }),
        Command::Ramanujan(args) => with_precision(args.common.precision, |p| match p {
            Bits::B53 => cmd_ramanujan::<f64>(args),
            Bits::B128 => cmd_ramanujan::<Mp128>(args),
            Bits::B256 => cmd_ramanujan::<Mp256>(args),
        }),
        Command::Identities(args) => with_precision(args.common.precision, |p| match p {
            Bits::B53 => cmd_identities::<f64>(args),
            Bits::B128 => cmd_identities::<Mp128>(args),
            Bits::B256 => cmd_identities::<Mp256>(args),
        }),
        Command::Runckel(args) => with_precision(args.common.precision, |p| match p {
            Bits::B53 => cmd_runckel::<f64>(args),
            Bits::B128 => cmd_runckel::<Mp128>(args),
            Bits::B256 => cmd_runckel::<Mp256>(args),
        }),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

enum Bits {
    B53,
    B128,
    B256,
}

fn with_precision<F>(bits: u32, run: F) -> Result<u8, CliError>
where
    F: FnOnce(Bits) -> Result<u8, CliError>,
{
    match bits {
        53 => run(Bits::B53),
        128 => run(Bits::B128),
        256 => run(Bits::B256),
        other => Err(CliError::Core(gfrac::Error::InvalidArgument(format!(
            "precision must be one of 53, 128, 256 (got {other})"
        )))),
    }
}

fn validate_common(common: &CommonArgs) -> Result<(), gfrac::Error> {
    if !(common.tol > 0.0 && common.tol.is_finite()) {
        return Err(gfrac::Error::InvalidArgument(format!(
            "tolerance must be positive and finite (got {})",
            common.tol
        )));
    }
    Ok(())
}

fn fraction_from_source<R: Real>(src: &SourceArgs) -> Result<GFraction<R>, gfrac::Error> {
    match (src.p, src.constant_g, &src.g) {
        (Some(p), None, None) => GFraction::e_p(p),
        (None, Some(g), None) => GFraction::constant(R::from_f64(g)),
        (None, None, Some(list)) => {
            GFraction::from_coefficients(list.iter().map(|&g| R::from_f64(g)).collect())
        }
        _ => Err(gfrac::Error::InvalidArgument(
            "exactly one of --p, --constant-g, --g is required".into(),
        )),
    }
}

fn unit_point<R: Real>(theta: Option<f64>, p: Option<u32>) -> Result<Cx<R>, gfrac::Error> {
    match (theta, p) {
        (Some(theta), _) => {
            let th = R::from_f64(theta);
            Ok(Cx::new(th.clone().cos(), th.sin()))
        }
        (None, Some(p)) if p > 0 => {
            let th = R::two() * R::pi() / R::from_int(i64::from(p));
            Ok(Cx::new(th.clone().cos(), th.sin()))
        }
        _ => Err(gfrac::Error::InvalidArgument(
            "a boundary point needs --theta or a positive --p".into(),
        )),
    }
}

// ---------------------------------------------------------------- eval ----

#[derive(Serialize)]
struct EvalReport {
    n_used: usize,
    value_at_zero: ExtendedComplex<f64>,
    value_at_inf: ExtendedComplex<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    degenerate_at: Option<usize>,
}

fn cmd_eval<R: Real>(args: &EvalArgs) -> Result<u8, CliError> {
    validate_common(&args.common)?;
    let config = ResolvedConfig::new("eval", &args.common).with_source(&args.source);
    let config = ResolvedConfig {
        z: Some([args.z, args.z_im]),
        ..config
    };
    let f = fraction_from_source::<R>(&args.source)?;
    let z = Cx::new(R::from_f64(args.z), R::from_f64(args.z_im));
    let tr = trace(&f, &z, args.common.n_max, None)?;
    let last = tr.records.last().expect("nonempty trace");
    let report = EvalReport {
        n_used: tr.last_index(),
        value_at_zero: last.at_zero.clone(),
        value_at_inf: last.at_inf.clone(),
        degenerate_at: tr.degenerate_at,
    };

    let rendered = match args.common.format {
        Format::Json => render_json(&Document {
            config: &config,
            records: &tr.records,
            report: &report,
        }),
        Format::Csv => {
            let mut s = csv_preamble(&config, Some(&report));
            s.push_str("n,h0_re,h0_im,hinf_re,hinf_im\n");
            for rec in &tr.records {
                let (a, b) = point_cells(&rec.at_zero);
                let (c, d) = point_cells(&rec.at_inf);
                s.push_str(&format!("{},{a},{b},{c},{d}\n", rec.n));
            }
            s
        }
    };
    Sink::new(args.common.output.clone()).write(&rendered)?;

    if let Some(step) = tr.degenerate_at {
        eprintln!(
            "precision exhausted at step {step} of {}; retry with --precision 128 (or 256)",
            args.common.n_max
        );
        return Ok(EXIT_PRECISION);
    }
    Ok(0)
}

// ----------------------------------------------------------- ramanujan ----

#[derive(Serialize)]
struct RamanujanReport {
    p: u32,
    z_p: f64,
    limit_periodic: LimitPeriodicCheck,
    convergence: ConvergenceReport,
}

fn cmd_ramanujan<R: Real>(args: &RamanujanArgs) -> Result<u8, CliError> {
    validate_common(&args.common)?;
    let config = ResolvedConfig {
        p: Some(args.p),
        ..ResolvedConfig::new("ramanujan", &args.common)
    };
    let cfg = ClassifyConfig {
        n_max: args.common.n_max,
        tol: args.common.tol,
        ..ClassifyConfig::default()
    };
    let out = ramanujan_experiment::<R>(args.p, &cfg)?;
    let report = RamanujanReport {
        p: out.p,
        z_p: out.z_p,
        limit_periodic: out.limit_periodic,
        convergence: out.report,
    };

    let rendered = match args.common.format {
        Format::Json => render_json(&Document {
            config: &config,
            records: &out.trace.records,
            report: &report,
        }),
        Format::Csv => {
            let mut s = csv_preamble(&config, Some(&report));
            s.push_str("n,h0_re,h0_im,hinf_re,hinf_im,residual_one,dist_limit_set\n");
            let one = Cx::new(1.0, 0.0);
            let set = report.convergence.limit_set.as_ref();
            for rec in &out.trace.records {
                let (a, b) = point_cells(&rec.at_zero);
                let (c, d) = point_cells(&rec.at_inf);
                let res = rec.at_zero.euclid_to(&one);
                let dist = match set {
                    Some((p1, p2)) => {
                        let d1 = match p1 {
                            ExtendedComplex::Finite(q) => rec.at_zero.euclid_to(q),
                            ExtendedComplex::Inf => f64::INFINITY,
                        };
                        let d2 = match p2 {
                            ExtendedComplex::Finite(q) => rec.at_zero.euclid_to(q),
                            ExtendedComplex::Inf => f64::INFINITY,
                        };
                        d1.min(d2)
                    }
                    None => res,
                };
                s.push_str(&format!(
                    "{},{a},{b},{c},{d},{},{}\n",
                    rec.n,
                    num(res),
                    num(dist)
                ));
            }
            s
        }
    };
    Sink::new(args.common.output.clone()).write(&rendered)?;

    if let Some(step) = report.convergence.diagnostics.degenerate_at {
        eprintln!("note: composition degenerated at step {step}; consider --precision 128");
    }
    Ok(0)
}

// ---------------------------------------------------------- identities ----

#[derive(Serialize)]
struct IdentitiesReport {
    all_pass: bool,
    worst_residual: f64,
}

fn cmd_identities<R: Real>(args: &IdentityArgs) -> Result<u8, CliError> {
    validate_common(&args.common)?;
    // identity checks default much tighter than limit detection
    let tol = if args.common.tol == 1e-3 { 1e-10 } else { args.common.tol };
    let config = ResolvedConfig {
        seed: Some(args.seed),
        trials: Some(args.trials),
        corrupt: Some(args.corrupt),
        tol,
        ..ResolvedConfig::new("identities", &args.common)
    };
    let cfg = IdentitySuiteConfig {
        seed: args.seed,
        trials: args.trials,
        max_len: args.max_len,
        tol,
        corrupt: args.corrupt,
    };
    let checks: Vec<IdentityCheck> = run_identity_suite::<R>(&cfg);
    let report = IdentitiesReport {
        all_pass: suite_passes(&checks),
        worst_residual: checks.iter().map(|c| c.max_residual).fold(0.0, f64::max),
    };

    let rendered = match args.common.format {
        Format::Json => render_json(&Document {
            config: &config,
            records: &checks,
            report: &report,
        }),
        Format::Csv => {
            let mut s = csv_preamble(&config, Some(&report));
            s.push_str("name,trials,max_residual,tol,pass\n");
            for c in &checks {
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    c.name,
                    c.trials,
                    num(c.max_residual),
                    num(c.tol),
                    c.pass
                ));
            }
            s
        }
    };
    Sink::new(args.common.output.clone()).write(&rendered)?;
    Ok(if report.all_pass { 0 } else { EXIT_CHECK_FAILED })
}

// ------------------------------------------------------------- runckel ----

#[derive(Serialize)]
struct RunckelReport {
    z_r: f64,
    is_runckel: bool,
    final_schur_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    probe: Option<GeneralConvergence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    probe_error: Option<String>,
}

#[derive(Serialize)]
struct RunckelRecord {
    n: usize,
    schur_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    u: Option<ExtendedComplex<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    at_u: Option<ExtendedComplex<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    at_v: Option<ExtendedComplex<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sigma_uv: Option<f64>,
}

fn cmd_runckel<R: Real>(args: &RunckelArgs) -> Result<u8, CliError> {
    validate_common(&args.common)?;
    let config = ResolvedConfig {
        theta: args.theta,
        ..ResolvedConfig::new("runckel", &args.common).with_source(&args.source)
    };
    let r = unit_point::<R>(args.theta, args.source.p)?;
    let z_r = runckel_z(&r)?;
    let f = fraction_from_source::<R>(&args.source)?;

    let n_max = args.common.n_max;
    let seq = SchurSeq::finite(f.schur_params(n_max + 1)?)?;
    let chk = runckel_check(&seq, &r, n_max, args.common.tol)?;

    let (probe, probe_error) = match general_convergence_probe(&f, &r, n_max, args.common.tol) {
        Ok(g) => (Some(g), None),
        Err(e @ gfrac::Error::DegenerateComposition { .. }) => return Err(e.into()),
        Err(e) => (None, Some(e.to_string())),
    };
    let report = RunckelReport {
        z_r: z_r.to_f64(),
        is_runckel: chk.is_runckel,
        final_schur_residual: *chk.residuals.last().expect("nonempty"),
        probe,
        probe_error,
    };

    // probe trace for the per-step records
    let tr = trace(&f, &Cx::new(z_r, R::zero()), n_max, Some(&r))?;
    let records: Vec<RunckelRecord> = tr
        .records
        .iter()
        .zip(chk.residuals.iter())
        .map(|(rec, &schur_residual)| {
            let (u, at_u, at_v, sigma_uv) = match &rec.probe {
                Some(p) => (
                    Some(p.u.clone()),
                    Some(p.at_u.clone()),
                    Some(p.at_v.clone()),
                    Some(chordal(&p.u, &p.u.conj())),
                ),
                None => (None, None, None, None),
            };
            RunckelRecord {
                n: rec.n,
                schur_residual,
                u,
                at_u,
                at_v,
                sigma_uv,
            }
        })
        .collect();

    let rendered = match args.common.format {
        Format::Json => render_json(&Document {
            config: &config,
            records: &records,
            report: &report,
        }),
        Format::Csv => {
            let mut s = csv_preamble(&config, Some(&report));
            s.push_str("n,schur_residual,u_re,u_im,hu_re,hu_im,hv_re,hv_im,sigma_uv\n");
            for rec in &records {
                let blank = || (String::new(), String::new());
                let (ure, uim) = rec.u.as_ref().map_or_else(blank, point_cells);
                let (hure, huim) = rec.at_u.as_ref().map_or_else(blank, point_cells);
                let (hvre, hvim) = rec.at_v.as_ref().map_or_else(blank, point_cells);
                let sig = rec.sigma_uv.map_or_else(String::new, num);
                s.push_str(&format!(
                    "{},{},{ure},{uim},{hure},{huim},{hvre},{hvim},{sig}\n",
                    rec.n,
                    num(rec.schur_residual)
                ));
            }
            s
        }
    };
    Sink::new(args.common.output.clone()).write(&rendered)?;

    if let Some(step) = tr.degenerate_at {
        eprintln!("note: composition degenerated at step {step}; consider --precision 128");
    }
    Ok(0)
}
