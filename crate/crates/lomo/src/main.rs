use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use lomo::error::Result;
use lomo::io;
use lomo::maximal::{fractional_maximal, RadiusGrid};
use lomo::multiplier::{
    bochner_riesz, maximal_bochner_riesz, t1_apply, t2_apply, MultiplierSpec, SchrodingerSpec,
};
use lomo::norms::{lorentz_morrey_norms_multi, lorentz_norm, SweepSpec};
use lomo::rearrangement::decreasing_rearrangement;
use lomo::report;
use lomo::verify::{run_suite, Suite, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "lomo",
    about = "Maximal operators, rearrangements, and Lorentz-Morrey norms on periodic grids",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the decreasing rearrangement of a grid function.
    Rearrange(RearrangeArgs),
    /// Apply the (fractional) maximal operator.
    Maximal(MaximalArgs),
    /// Evaluate a Lorentz, Morrey, or Lorentz-Morrey norm.
    Norm(NormArgs),
    /// Apply the Bochner-Riesz mean, or its maximal variant.
    BochnerRiesz(BochnerArgs),
    /// Apply a Schrodinger-type operator T1 or T2.
    Schrodinger(SchrodingerArgs),
    /// Run inequality-verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct RearrangeArgs {
    #[arg(long)]
    input: PathBuf,
    /// Profile JSON output path; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct MaximalArgs {
    /// Smoothing exponent alpha in [0, n).
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
    #[arg(long, default_value_t = 24)]
    radii_count: usize,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: PathBuf,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SpaceKind {
    Lorentz,
    Morrey,
    LorentzMorrey,
}

#[derive(Args)]
struct NormArgs {
    #[arg(long, value_enum)]
    space: SpaceKind,
    #[arg(long)]
    p: f64,
    #[arg(long)]
    q: Option<f64>,
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long, default_value_t = 4)]
    centers_stride: usize,
    #[arg(long, default_value_t = 20)]
    radii_count: usize,
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct BochnerArgs {
    /// Smoothness exponent; must exceed (n-1)/2.
    #[arg(long)]
    delta: f64,
    /// Single scale r; mutually exclusive with --maximal.
    #[arg(long, conflicts_with = "maximal")]
    r: Option<f64>,
    /// Compute the maximal function over a geometric family of scales.
    #[arg(long)]
    maximal: bool,
    #[arg(long, default_value_t = 16)]
    radii_count: usize,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: PathBuf,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SchrodingerMode {
    T1,
    T2,
}

#[derive(Args)]
struct SchrodingerArgs {
    #[arg(long, value_enum)]
    mode: SchrodingerMode,
    #[arg(long)]
    gamma: f64,
    #[arg(long)]
    beta: f64,
    /// Potential V as a GridFunction JSON file; V must be strictly positive.
    #[arg(long)]
    potential: PathBuf,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Space dimension n (1, 2, or 3).
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Grid points per axis (power of two, >= 8).
    #[arg(long, default_value_t = 256)]
    grid: usize,
    /// Report output path, .json or .csv by extension.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Optional p override, gated by the hypotheses of the selected suite.
    #[arg(long)]
    p: Option<f64>,
    /// Optional q override.
    #[arg(long)]
    q: Option<f64>,
    /// Optional lambda override.
    #[arg(long)]
    lambda: Option<f64>,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("LOMO_THREADS") {
        match threads.parse::<usize>() {
            Ok(count) if count > 0 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(count)
                    .build_global();
            }
            _ => return usage_error("LOMO_THREADS must be a positive integer"),
        }
    }
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Rearrange(args) => cmd_rearrange(args),
        Command::Maximal(args) => cmd_maximal(args),
        Command::Norm(args) => cmd_norm(args),
        Command::BochnerRiesz(args) => cmd_bochner(args),
        Command::Schrodinger(args) => cmd_schrodinger(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn cmd_rearrange(args: RearrangeArgs) -> Result<ExitCode> {
    let f = io::read_grid_function(&args.input)?;
    let profile = decreasing_rearrangement(&f);
    match &args.output {
        Some(path) => io::write_profile(path, &profile)?,
        None => println!(
            "{}",
            json!({ "breakpoints": profile.breakpoints(), "values": profile.values() })
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_maximal(args: MaximalArgs) -> Result<ExitCode> {
    let f = io::read_grid_function(&args.input)?;
    let radii = RadiusGrid::geometric(f.domain(), args.radii_count);
    let mf = fractional_maximal(&f, args.alpha, &radii)?;
    io::write_grid_function(&args.output, &mf)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_norm(args: NormArgs) -> Result<ExitCode> {
    let f = io::read_grid_function(&args.input)?;
    let out = match args.space {
        SpaceKind::Lorentz => {
            let q = match args.q {
                Some(q) => q,
                None => {
                    eprintln!("error: --space lorentz requires --q");
                    return Ok(ExitCode::from(2));
                }
            };
            let norm = lorentz_norm(&f, args.p, q)?;
            json!({ "norm": norm, "argmax_center": null, "argmax_radius": null,
                    "sweep_stats": null })
        }
        SpaceKind::Morrey | SpaceKind::LorentzMorrey => {
            let lambda = match args.lambda {
                Some(l) => l,
                None => {
                    eprintln!("error: this space requires --lambda");
                    return Ok(ExitCode::from(2));
                }
            };
            let q = match (args.space, args.q) {
                (SpaceKind::Morrey, _) => args.p,
                (_, Some(q)) => q,
                (_, None) => {
                    eprintln!("error: --space lorentz-morrey requires --q");
                    return Ok(ExitCode::from(2));
                }
            };
            let sweep = SweepSpec::default_for(&f, args.centers_stride, args.radii_count);
            let result = &lorentz_morrey_norms_multi(&f, &[(args.p, q, lambda)], &sweep)?[0];
            json!({
                "norm": result.norm,
                "argmax_center": result.argmax_center[..f.domain().dim()],
                "argmax_radius": result.argmax_radius,
                "sweep_stats": { "centers": result.centers_used, "radii": result.radii_used },
            })
        }
    };
    println!("{}", serde_json::to_string_pretty(&out).expect("valid JSON"));
    Ok(ExitCode::SUCCESS)
}

fn cmd_bochner(args: BochnerArgs) -> Result<ExitCode> {
    let f = io::read_grid_function(&args.input)?;
    let out = match (args.r, args.maximal) {
        (Some(r), false) => {
            let spec = MultiplierSpec::new(f.domain().dim(), args.delta, r)?;
            bochner_riesz(&f, &spec)
        }
        (None, true) => {
            let radii = RadiusGrid::geometric(f.domain(), args.radii_count);
            maximal_bochner_riesz(&f, args.delta, &radii)?
        }
        _ => {
            eprintln!("error: pass exactly one of --r <scale> or --maximal");
            return Ok(ExitCode::from(2));
        }
    };
    io::write_grid_function(&args.output, &out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_schrodinger(args: SchrodingerArgs) -> Result<ExitCode> {
    let f = io::read_grid_function(&args.input)?;
    let potential = io::read_grid_function(&args.potential)?;
    let out = match args.mode {
        SchrodingerMode::T1 => {
            let spec = SchrodingerSpec::t1(potential, args.gamma, args.beta)?;
            t1_apply(&f, &spec)?
        }
        SchrodingerMode::T2 => {
            let spec = SchrodingerSpec::t2(potential, args.gamma, args.beta)?;
            t2_apply(&f, &spec)?
        }
    };
    io::write_grid_function(&args.output, &out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let suite = match Suite::parse(&args.suite) {
        Some(s) => s,
        None => {
            eprintln!(
                "error: unknown suite '{}'; expected one of all, sandwich, lemma21, lemma22, \
                 lemma23, thm31, thm32, cond31, section4",
                args.suite
            );
            return Ok(ExitCode::from(2));
        }
    };
    // Hypothesis gates for explicit exponent overrides.
    if let Some(p) = args.p {
        if !(1.0 < p && p.is_finite()) {
            eprintln!("error: hypothesis violated: 1 < p < \u{221e} (got p = {p})");
            return Ok(ExitCode::from(2));
        }
    }
    if let Some(q) = args.q {
        if !(1.0 <= q && q.is_finite()) {
            eprintln!("error: hypothesis violated: 1 \u{2264} q < \u{221e} (got q = {q})");
            return Ok(ExitCode::from(2));
        }
    }
    if let Some(lambda) = args.lambda {
        let n = args.n as f64;
        if !(0.0..=n).contains(&lambda) {
            eprintln!("error: hypothesis violated: 0 \u{2264} \u{3bb} \u{2264} n (got \u{3bb} = {lambda})");
            return Ok(ExitCode::from(2));
        }
    }
    let cfg = VerifyConfig {
        seed: args.seed,
        dim: args.n,
        grid_n: args.grid,
        side: 2.0,
    };
    let reports = run_suite(suite, &cfg)?;
    let mut all_pass = true;
    for r in &reports {
        let verdict = if r.verdict.is_pass() { "pass" } else { "FAIL" };
        all_pass &= r.verdict.is_pass();
        println!(
            "{:<20} {}  c={}  C={}  drift={}  {} ms",
            r.check_id,
            verdict,
            r.c_lower.map(|v| format!("{v:.4}")).unwrap_or_else(|| "-".into()),
            r.c_upper.map(|v| format!("{v:.4}")).unwrap_or_else(|| "-".into()),
            r.refinement_drift
                .map(|v| format!("{v:.4}"))
                .unwrap_or_else(|| "-".into()),
            r.runtime_ms
        );
    }
    if let Some(path) = &args.report {
        let text = match path.extension().and_then(|e| e.to_str()) {
            Some("csv") => report::to_csv(&reports),
            _ => report::to_json(&reports),
        };
        io::write_text(path, &text)?;
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
