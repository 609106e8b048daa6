use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gruss::functional::{check_cor_3_1, check_thm_5_1, sharpness_witness};
use gruss::transforms::{fourier, fourier_mean_approx, mellin, mellin_mean_approx};
use gruss::{Ball, Flavor, ModuleVector, Slack, TransformCertificate};
use gruss_harness::checks::{cstar_unit, SHARP_TOL_CSTAR, SHARP_TOL_HSTAR};
use gruss_harness::rng::trial_rng;
use gruss_harness::{
    emit_report, load_instance, random_instance, run_suite, save_instance, tightness_scan, FlavorChoice,
    HarnessError, ReportFormat, SuiteConfig,
};
use serde::Serialize;

const SLACK_ENV: &str = "GRUSS_SLACK_SCALE";

#[derive(Parser)]
#[command(name = "gruss", version, about = "Randomized verification of Grüss-type bounds in matrix modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full suite on seeded random instances.
    Verify(VerifyArgs),
    /// Report the largest tightness of one inequality.
    Scan(ScanArgs),
    /// Evaluate a bound on its constructive equality instance.
    Witness(WitnessArgs),
    /// Compute a Fourier or Mellin transform of an instance file's tuple.
    Transform(TransformArgs),
    /// Write a random instance file.
    Sample(SampleArgs),
}

#[derive(Args)]
struct SuiteArgs {
    /// JSON config file; flags below override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    /// Check radius conditions of the transform bounds over every order.
    #[arg(long)]
    strict: bool,
    /// Emit the JSON report instead of the text table.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    suite: SuiteArgs,
    #[arg(long, value_enum)]
    flavor: Option<FlavorChoice>,
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    suite: SuiteArgs,
    /// Inequality id, e.g. 3.8, 5.2, 4.15.
    #[arg(long = "ineq")]
    ineq: String,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long = "ineq", value_parser = ["3.8", "5.2"])]
    ineq: String,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    r: f64,
    #[arg(long)]
    s: f64,
    /// Seed for the centers `a`, `b`.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Fourier,
    Mellin,
}

#[derive(Args)]
struct TransformArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    input: PathBuf,
    /// Required for the Fourier transform.
    #[arg(long, allow_hyphen_values = true)]
    omega: Option<f64>,
    #[arg(long)]
    m: usize,
    /// Also approximate by the mean and certify the error bound.
    #[arg(long)]
    certify: bool,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Serialize)]
struct TransformOutput {
    kind: Kind,
    m: usize,
    omega: Option<f64>,
    value: ModuleVector,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<TransformCertificate>,
}

#[derive(Debug)]
enum Failure {
    Violation,
    Usage(String),
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<gruss::Error> for Failure {
    fn from(e: gruss::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

type Outcome = Result<(), Failure>;

fn verdict(pass: bool) -> Outcome {
    if pass {
        Ok(())
    } else {
        Err(Failure::Violation)
    }
}

fn slack_override() -> Result<Option<f64>, Failure> {
    match std::env::var(SLACK_ENV) {
        Ok(v) => v
            .trim()
            .parse::<f64>()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("{SLACK_ENV}={v} is not a number"))),
        Err(_) => Ok(None),
    }
}

fn build_config(args: &SuiteArgs) -> Result<SuiteConfig, Failure> {
    let mut config = match &args.config {
        Some(path) => SuiteConfig::from_file(path)?,
        None => SuiteConfig::default(),
    };
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    if let Some(trials) = args.trials {
        config.trials = trials;
    }
    config.strict_radius_mode |= args.strict;
    if let Some(scale) = slack_override()? {
        config.slack_scale = scale;
    }
    config.validate()?;
    Ok(config)
}

fn format_of(json: bool) -> ReportFormat {
    if json {
        ReportFormat::Json
    } else {
        ReportFormat::Text
    }
}

fn verify(args: VerifyArgs) -> Outcome {
    let mut config = build_config(&args.suite)?;
    if let Some(flavor) = args.flavor {
        config.flavor = flavor;
    }
    let report = run_suite(&config)?;
    emit_report(&report, format_of(args.suite.json), &mut std::io::stdout().lock())?;
    verdict(report.passed())
}

fn scan(args: ScanArgs) -> Outcome {
    let config = build_config(&args.suite)?;
    let report = tightness_scan(&config, &args.ineq)?;
    emit_report(&report, format_of(args.suite.json), &mut std::io::stdout().lock())?;
    verdict(report.passed())
}

fn witness(args: WitnessArgs) -> Outcome {
    let slack = Slack::new(slack_override()?.unwrap_or(1.0));
    let base = random_instance(&mut trial_rng(args.seed, 0, 0), args.k, args.d, 1, Flavor::CStar)?;
    let (a, b) = (&base.a, &base.b);
    let (cert, tol) = if args.ineq == "3.8" {
        let e = cstar_unit(args.k, args.d);
        let w = sharpness_witness(a, b, args.r, args.s, &e, Flavor::CStar)?;
        (check_cor_3_1(&w.p, Ball::new(&w.xs, a), Ball::new(&w.ys, b), slack)?, SHARP_TOL_CSTAR)
    } else {
        let e = cstar_unit(args.k, args.d).scale_real(1.0 / (args.k as f64).sqrt());
        let w = sharpness_witness(a, b, args.r, args.s, &e, Flavor::HStar)?;
        (check_thm_5_1(&w.p, Ball::new(&w.xs, a), Ball::new(&w.ys, b), slack)?, SHARP_TOL_HSTAR)
    };
    let sharp = cert.pass && (cert.tightness - 1.0).abs() <= tol;
    let mut out = std::io::stdout().lock();
    if args.json {
        serde_json::to_writer_pretty(&mut out, &cert).map_err(|e| Failure::Usage(e.to_string()))?;
        writeln!(out)?;
    } else {
        writeln!(out, "inequality {}  k {}  d {}  r {}  s {}", cert.name, args.k, args.d, args.r, args.s)?;
        writeln!(out, "lhs        {:.17e}", cert.lhs)?;
        writeln!(out, "rhs        {:.17e}", cert.final_rhs())?;
        writeln!(out, "tightness  {:.17e}", cert.tightness)?;
        writeln!(out, "status     {}", if sharp { "sharp" } else { "FAIL" })?;
    }
    verdict(sharp)
}

fn transform(args: TransformArgs) -> Outcome {
    let inst = load_instance(&args.input)?;
    let slack = Slack::new(slack_override()?.unwrap_or(1.0));
    let (value, certificate) = match args.kind {
        Kind::Fourier => {
            let omega = args
                .omega
                .ok_or_else(|| Failure::Usage("--omega is required for the Fourier transform".into()))?;
            let value = fourier(&inst.xs, omega, args.m)?;
            let cert = if args.certify {
                Some(fourier_mean_approx(Ball::new(&inst.xs, &inst.a), omega, args.m, slack)?)
            } else {
                None
            };
            (value, cert)
        }
        Kind::Mellin => {
            let value = mellin(&inst.xs, args.m)?;
            let cert = if args.certify {
                Some(mellin_mean_approx(Ball::new(&inst.xs, &inst.a), args.m, slack)?)
            } else {
                None
            };
            (value, cert)
        }
    };
    let pass = certificate.as_ref().is_none_or(|c| c.pass);
    let output = TransformOutput {
        kind: args.kind,
        m: args.m,
        omega: args.omega.filter(|_| args.kind == Kind::Fourier),
        value,
        certificate,
    };
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, &output).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out)?;
    verdict(pass)
}

fn sample(args: SampleArgs) -> Outcome {
    let inst = random_instance(&mut trial_rng(args.seed, 0, 0), args.k, args.d, args.n, Flavor::CStar)?;
    save_instance(&args.out, &inst)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Scan(a) => scan(a),
        Command::Witness(a) => witness(a),
        Command::Transform(a) => transform(a),
        Command::Sample(a) => sample(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
