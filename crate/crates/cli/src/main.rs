//! `nkdv` - classify, sample, audit, integrate and simulate the
//! traveling waves of (-u_xx/u)_t = 2 u u_x.
//!
//! JSON goes to standard output, human-readable notes to standard
//! error. Exit codes: 0 success, 1 numeric failure, 2 rejected input.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nkdv_core::closed_form::{
    audit_all, default_regime_samples, Branch, CaseId, ProfileConstants, WaveProfile, WidthVariant,
};
use nkdv_core::error::Error;
use nkdv_core::hamiltonian_ode::{integrate, Method, OdeState};
use nkdv_core::operator_lab::certification_report;
use nkdv_core::pde_sim::{run_simulation, SimConfig};
use nkdv_core::phase_plane::{classify, TravelingWaveParams};

#[derive(Parser)]
#[command(
    name = "nkdv",
    version,
    about = "traveling waves of the negative-order KdV flow"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the traveling-wave phase plane at one (c, g)
    Classify(ClassifyArgs),
    /// Sample a closed-form profile to CSV (xi, U, dU, ddU)
    Sample(SampleArgs),
    /// Substitute every solution family into the energy relation and
    /// report residuals
    Audit(AuditArgs),
    /// Integrate the traveling-wave ODE and emit the trajectory as CSV
    Ode(OdeArgs),
    /// Evolve an initial profile under the flow (config JSON file)
    Simulate(SimulateArgs),
    /// Certify the operator identities across grid refinement levels
    VerifyOperators(VerifyOperatorsArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, allow_hyphen_values = true)]
    c: f64,
    #[arg(long, allow_hyphen_values = true)]
    g: f64,
}

#[derive(Args)]
struct SampleArgs {
    /// Solution family: breaking23, exp24, soliton25, dn26, cn27,
    /// kink28, sn29
    #[arg(long)]
    case: String,
    #[arg(long, allow_hyphen_values = true)]
    c: f64,
    #[arg(long, allow_hyphen_values = true)]
    g: f64,
    /// Orbit level for the elliptic families
    #[arg(long, allow_hyphen_values = true)]
    h: Option<f64>,
    /// Free constant of the exponential family
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    /// Profile shift
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    xi0: f64,
    #[arg(long, default_value = "plus")]
    branch: String,
    /// Width variant for the sech/tanh families: paper | derived
    #[arg(long, default_value = "derived")]
    variant: String,
    /// Sample window lo:hi
    #[arg(long, allow_hyphen_values = true)]
    range: String,
    /// Number of samples
    #[arg(long, default_value_t = 1001)]
    n: usize,
}

#[derive(Args)]
struct AuditArgs {
    /// Audit the built-in deterministic regime sweep
    #[arg(long, default_value_t = true)]
    default_regimes: bool,
    /// Parameter points per sign regime
    #[arg(long, default_value_t = 5)]
    per_regime: usize,
    /// Seed for the deterministic regime sweep
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Output format: json | csv
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Args)]
struct OdeArgs {
    #[arg(long, allow_hyphen_values = true)]
    c: f64,
    #[arg(long, allow_hyphen_values = true)]
    g: f64,
    #[arg(long, allow_hyphen_values = true)]
    u0: f64,
    #[arg(long, allow_hyphen_values = true)]
    y0: f64,
    #[arg(long, default_value_t = 1e-3)]
    dxi: f64,
    #[arg(long, default_value_t = 10_000)]
    steps: usize,
    /// leapfrog | rk4
    #[arg(long, default_value = "leapfrog")]
    method: String,
}

#[derive(Args)]
struct SimulateArgs {
    /// Path to the run-configuration JSON
    #[arg(long)]
    config: std::path::PathBuf,
    /// Directory for the slice CSV (defaults to $NKDV_OUT_DIR, then ".")
    #[arg(long)]
    out_dir: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct VerifyOperatorsArgs {
    /// Coarsest grid size
    #[arg(long, default_value_t = 128)]
    n: usize,
    /// Number of refinement levels (doubling n each time)
    #[arg(long, default_value_t = 3)]
    refine: usize,
}

fn main() -> ExitCode {
    // die quietly when a downstream pipe closes (e.g. `nkdv ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::RejectedInput(_) | Error::InconsistentInput { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli) -> nkdv_core::Result<()> {
    match cli.command {
        Command::Classify(args) => cmd_classify(args),
        Command::Sample(args) => cmd_sample(args),
        Command::Audit(args) => cmd_audit(args),
        Command::Ode(args) => cmd_ode(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::VerifyOperators(args) => cmd_verify_operators(args),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> nkdv_core::Result<String> {
    serde_json::to_string_pretty(value)
        .map_err(|e| Error::NumericFailure(format!("serialization failed: {e}")))
}

fn cmd_classify(args: ClassifyArgs) -> nkdv_core::Result<()> {
    let params = TravelingWaveParams::new(args.c, args.g)?;
    let portrait = classify(params);
    println!("{}", to_json(&portrait)?);
    Ok(())
}

fn parse_branch(s: &str) -> nkdv_core::Result<Branch> {
    match s {
        "plus" => Ok(Branch::Plus),
        "minus" => Ok(Branch::Minus),
        other => Err(Error::RejectedInput(format!(
            "branch must be plus or minus, got `{other}`"
        ))),
    }
}

fn parse_variant(s: &str) -> nkdv_core::Result<WidthVariant> {
    match s {
        "paper" => Ok(WidthVariant::Paper),
        "derived" => Ok(WidthVariant::Derived),
        other => Err(Error::RejectedInput(format!(
            "variant must be paper or derived, got `{other}`"
        ))),
    }
}

fn parse_range(s: &str) -> nkdv_core::Result<(f64, f64)> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| Error::RejectedInput(format!("range must be lo:hi, got `{s}`")))?;
    let lo: f64 = lo
        .parse()
        .map_err(|_| Error::RejectedInput(format!("bad range endpoint `{lo}`")))?;
    let hi: f64 = hi
        .parse()
        .map_err(|_| Error::RejectedInput(format!("bad range endpoint `{hi}`")))?;
    if lo >= hi {
        return Err(Error::RejectedInput(format!(
            "range must satisfy lo < hi, got {lo}:{hi}"
        )));
    }
    Ok((lo, hi))
}

fn cmd_sample(args: SampleArgs) -> nkdv_core::Result<()> {
    let params = TravelingWaveParams::new(args.c, args.g)?;
    let case: CaseId = args.case.parse()?;
    let mut constants = ProfileConstants::default()
        .with_xi0(args.xi0)
        .with_width_variant(parse_variant(&args.variant)?);
    if let Some(h) = args.h {
        constants = constants.with_h(h);
    }
    if let Some(a) = args.a {
        constants = constants.with_a(a);
    }
    let profile = WaveProfile::new(params, case, parse_branch(&args.branch)?, constants)?;
    let (lo, hi) = parse_range(&args.range)?;
    let n = args.n.max(2);
    let dx = (hi - lo) / (n - 1) as f64;

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let w = |out: &mut dyn Write, s: &str| {
        out.write_all(s.as_bytes())
            .map_err(|e| Error::NumericFailure(format!("write failed: {e}")))
    };
    w(&mut out, "# schema: nkdv.profile/1\nxi,U,dU,ddU\n")?;
    for i in 0..n {
        let xi = lo + i as f64 * dx;
        match profile.eval_all_with_guard(xi, dx / 2.0) {
            Ok((u, du, ddu)) => w(&mut out, &format!("{xi},{u},{du},{ddu}\n"))?,
            Err(Error::Singularity { .. }) => w(&mut out, &format!("{xi},,,\n"))?,
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

fn cmd_audit(args: AuditArgs) -> nkdv_core::Result<()> {
    if !args.default_regimes {
        return Err(Error::RejectedInput(
            "only the built-in regime sweep is available; pass --default-regimes".into(),
        ));
    }
    if args.per_regime == 0 {
        return Err(Error::RejectedInput(
            "per-regime count must be positive".into(),
        ));
    }
    let report = audit_all(&default_regime_samples(args.per_regime, args.seed));
    match args.format.as_str() {
        "json" => println!("{}", to_json(&report)?),
        "csv" => print!("{}", report.to_csv()),
        other => {
            return Err(Error::RejectedInput(format!(
                "format must be json or csv, got `{other}`"
            )))
        }
    }
    for flag in &report.flags {
        eprintln!("flag: {flag}");
    }
    Ok(())
}

fn cmd_ode(args: OdeArgs) -> nkdv_core::Result<()> {
    let params = TravelingWaveParams::new(args.c, args.g)?;
    let method = match args.method.as_str() {
        "leapfrog" => Method::Leapfrog,
        "rk4" => Method::Rk4,
        other => {
            return Err(Error::RejectedInput(format!(
                "method must be leapfrog or rk4, got `{other}`"
            )))
        }
    };
    let traj = integrate(
        params,
        OdeState {
            u: args.u0,
            y: args.y0,
            xi: 0.0,
        },
        args.dxi,
        args.steps,
        method,
    )?;
    print!("{}", traj.to_csv());
    eprintln!(
        "max energy error {:e} over {} steps",
        traj.max_energy_error(),
        traj.states().len() - 1
    );
    Ok(())
}

fn cmd_simulate(args: SimulateArgs) -> nkdv_core::Result<()> {
    let text = std::fs::read_to_string(&args.config).map_err(|e| {
        Error::RejectedInput(format!("cannot read config {}: {e}", args.config.display()))
    })?;
    let config: SimConfig = serde_json::from_str(&text)
        .map_err(|e| Error::RejectedInput(format!("invalid config: {e}")))?;
    let run = run_simulation(&config)?;

    let out_dir = args
        .out_dir
        .or_else(|| std::env::var_os("NKDV_OUT_DIR").map(Into::into))
        .unwrap_or_else(|| ".".into());
    std::fs::create_dir_all(&out_dir)
        .map_err(|e| Error::RejectedInput(format!("cannot create {}: {e}", out_dir.display())))?;
    let stem = args
        .config
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "run".into());
    let slice_path = out_dir.join(format!("{stem}_slices.csv"));
    std::fs::write(&slice_path, run.slices_to_csv()?).map_err(|e| {
        Error::NumericFailure(format!("cannot write {}: {e}", slice_path.display()))
    })?;
    eprintln!(
        "wrote {} slices to {}",
        run.slices.len(),
        slice_path.display()
    );
    println!("{}", to_json(&run.summary)?);
    Ok(())
}

fn cmd_verify_operators(args: VerifyOperatorsArgs) -> nkdv_core::Result<()> {
    let report = certification_report(args.n, args.refine)?;
    println!("{}", to_json(&report)?);
    for series in &report.series {
        let shrinking = series
            .residuals
            .windows(2)
            .all(|w| w[1] <= w[0] || w[0] < 1e-11);
        eprintln!(
            "{}: {:?}{}",
            series.name,
            series.residuals,
            if shrinking { "" } else { "  <- not monotone" }
        );
    }
    Ok(())
}
