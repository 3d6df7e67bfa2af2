//! `ordmix` — evaluate, sample and verify order-statistics mixture
//! distributions from the command line.
//!
//! Exit codes: 0 success / all checks passed, 1 a check or verification
//! failed, 2 usage or domain error.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use ordmix::{
    check_order, classify_aging, copula_validity, BivariateTransformed, Copula, FrechetLower,
    FrechetUpper, Grid, Independence, OrderKind, Stream, TransformedCopula,
};
use ordmix_cli::output::{csv_row, fmt_f64, to_json, Envelope};
use ordmix_cli::spec::{self, ParsedDist};
use ordmix_cli::suite;

const DEFAULT_SEED: u64 = 42;

#[derive(Parser)]
#[command(
    name = "ordmix",
    about = "Order-statistics mixture distributions: evaluation, sampling, order checks, copula grids and a built-in verification suite",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate cdf/pdf/hazard/survival/quantile/mrl at a list of points (CSV out)
    Eval(EvalArgs),
    /// Draw reproducible samples (CSV out)
    Sample(SampleArgs),
    /// Run a stochastic-order or aging check (JSON report; exit 0 iff it holds)
    Check(CheckArgs),
    /// Tabulate a transformed copula on a uniform grid (CSV out)
    CopulaGrid(CopulaGridArgs),
    /// Run the built-in verification suite (exit 0 iff every criterion passes)
    Verify(VerifyArgs),
}

#[derive(Args)]
struct DistFlags {
    /// Distribution family: texp | slaplace | transform
    #[arg(long)]
    family: Option<String>,
    /// Shorthand for --family transform
    #[arg(long)]
    transform: bool,
    /// Rate/scale parameter for texp and slaplace
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    theta: f64,
    /// Mixing parameter in [-1, 1]
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    lambda: f64,
    /// Baseline for --family transform: exp | laplace | weibull | uniform
    #[arg(long, default_value = "exp")]
    baseline: String,
    /// Comma-separated baseline parameters (defaults: exp/laplace 1, weibull 1,1, uniform 0,1)
    #[arg(long, allow_hyphen_values = true)]
    bparams: Option<String>,
}

impl DistFlags {
    fn build(&self) -> Result<ParsedDist, spec::SpecError> {
        let family = if self.transform {
            "transform"
        } else {
            self.family.as_deref().unwrap_or("texp")
        };
        spec::from_flags(
            family,
            self.theta,
            self.lambda,
            &self.baseline,
            self.bparams.as_deref(),
        )
    }
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    dist: DistFlags,
    /// What to evaluate: cdf | pdf | survival | hazard | quantile | mrl
    #[arg(long)]
    what: String,
    /// Comma-separated evaluation points (numbers or ln2 | e | pi)
    #[arg(long, allow_hyphen_values = true)]
    points: String,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct SampleArgs {
    #[command(flatten)]
    dist: DistFlags,
    /// Number of draws
    #[arg(long)]
    n: usize,
    /// Stream seed (default: ORDMIX_SEED env var, then 42)
    #[arg(long)]
    seed: Option<u64>,
    /// Sampling route: mixture (order-statistics construction) | inverse
    #[arg(long, default_value = "mixture")]
    method: String,
    /// Draw pairs from the bivariate construction instead
    #[arg(long)]
    bivariate: bool,
    /// Coupling for --bivariate: independence | m | w
    #[arg(long, default_value = "independence")]
    coupling: String,
    /// First margin spec for --bivariate (e.g. exp:1, texp:1,0.5)
    #[arg(long, default_value = "exp:1")]
    margin1: String,
    /// Second margin spec for --bivariate
    #[arg(long, default_value = "exp:1")]
    margin2: String,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct CheckArgs {
    #[command(subcommand)]
    kind: CheckKind,
}

#[derive(Subcommand)]
enum CheckKind {
    /// Check F1 ≺ F2 in a stochastic order
    Order(OrderArgs),
    /// Classify aging behaviour (IHR/DHR, IHRA/DHRA, NBU/NWU)
    Aging(AgingArgs),
}

#[derive(Args)]
struct OrderArgs {
    /// Order kind: st | hr | lr | convex | star | su | disp
    kind: String,
    /// Left distribution spec (e.g. texp:1,0.9 or transform:weibull:2,1:0.5)
    #[arg(long)]
    left: String,
    /// Right distribution spec
    #[arg(long)]
    right: String,
    /// Grid resolution (quantile-spaced on the left distribution)
    #[arg(long, default_value_t = 512)]
    grid_points: usize,
    /// Violation tolerance
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct AgingArgs {
    #[command(flatten)]
    dist: DistFlags,
    #[arg(long, default_value_t = 512)]
    grid_points: usize,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct CopulaGridArgs {
    /// Baseline coupling: independence | m | w
    #[arg(long, default_value = "independence")]
    coupling: String,
    /// Mixing parameter in [-1, 1]
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    lambda: f64,
    /// Cells per axis (emits (resolution+1)² rows)
    #[arg(long, default_value_t = 101)]
    resolution: usize,
    /// Also run the validity certificate and fail (exit 1) if it does not hold
    #[arg(long)]
    certify: bool,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Scope: all | univariate | bivariate, or `ks` to test sampled
    /// values piped on stdin against a distribution's cdf
    #[arg(default_value = "all")]
    scope: String,
    /// Emit the result as JSON
    #[arg(long)]
    json: bool,
    /// Distribution the stdin sample is tested against (scope `ks` only)
    #[command(flatten)]
    dist: DistFlags,
    #[arg(long)]
    out: Option<String>,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let outcome = match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Sample(args) => cmd_sample(args),
        Command::Check(args) => cmd_check(args),
        Command::CopulaGrid(args) => cmd_copula_grid(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match outcome {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

type CmdResult = Result<i32, String>;

fn emit(out: Option<&str>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(|e| format!("writing {path}: {e}")),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| e.to_string())
        }
    }
}

fn default_seed() -> u64 {
    std::env::var("ORDMIX_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

fn cmd_eval(args: EvalArgs) -> CmdResult {
    let dist = args.dist.build().map_err(|e| e.to_string())?;
    let points = spec::parse_number_list(&args.points).map_err(|e| e.to_string())?;
    let d = dist.univariate();
    let mut lines = vec![format!("x,{}", args.what)];
    for &x in &points {
        let value = match args.what.as_str() {
            "cdf" => d.cdf(x),
            "pdf" => d.pdf(x),
            "survival" => d.survival(x),
            "hazard" => d.hazard(x).map_err(|e| e.to_string())?,
            "quantile" => d.quantile(x).map_err(|e| e.to_string())?,
            "mrl" => dist.mean_residual_life(x).map_err(|e| e.to_string())?,
            other => return Err(format!("unknown evaluation target `{other}`")),
        };
        lines.push(csv_row(&[fmt_f64(x), fmt_f64(value)]));
    }
    emit(args.out.as_deref(), &(lines.join("\n") + "\n"))?;
    Ok(0)
}

fn parse_coupling(name: &str) -> Result<Box<dyn Copula>, String> {
    match name {
        "independence" | "pi" => Ok(Box::new(Independence)),
        "m" | "upper" => Ok(Box::new(FrechetUpper)),
        "w" | "lower" => Ok(Box::new(FrechetLower)),
        other => Err(format!(
            "unknown coupling `{other}` (expected independence, m or w)"
        )),
    }
}

fn cmd_sample(args: SampleArgs) -> CmdResult {
    if args.n < 1 {
        return Err("--n must be at least 1".into());
    }
    let seed = args.seed.unwrap_or_else(default_seed);
    let mut stream = Stream::from_seed(seed);
    let content = if args.bivariate {
        let coupling = parse_coupling(&args.coupling)?;
        let m1 = spec::from_spec_string(&args.margin1).map_err(|e| e.to_string())?;
        let m2 = spec::from_spec_string(&args.margin2).map_err(|e| e.to_string())?;
        let lambda = args.dist.lambda;
        let b = BivariateTransformed::new(m1.sampler(), m2.sampler(), coupling, lambda)
            .map_err(|e| e.to_string())?;
        let pairs = b.sample(args.n, &mut stream).map_err(|e| e.to_string())?;
        let mut lines = vec!["x,y".to_string()];
        lines.extend(
            pairs
                .iter()
                .map(|(x, y)| csv_row(&[fmt_f64(*x), fmt_f64(*y)])),
        );
        lines.join("\n") + "\n"
    } else {
        let dist = args.dist.build().map_err(|e| e.to_string())?;
        let sampler = dist.sampler();
        let draws = match args.method.as_str() {
            "mixture" => sampler.sample(args.n, &mut stream),
            "inverse" => sampler.sample_inverse(args.n, &mut stream),
            other => return Err(format!("unknown method `{other}`")),
        };
        let mut lines = vec!["value".to_string()];
        lines.extend(draws.iter().map(|v| fmt_f64(*v)));
        lines.join("\n") + "\n"
    };
    emit(args.out.as_deref(), &content)?;
    Ok(0)
}

#[derive(Serialize)]
struct CheckConfig {
    grid_points: usize,
    tol: f64,
    left: String,
    right: Option<String>,
}

fn cmd_check(args: CheckArgs) -> CmdResult {
    match args.kind {
        CheckKind::Order(o) => {
            let kind: OrderKind = o.kind.parse().map_err(|e: ordmix::Error| e.to_string())?;
            let left = spec::from_spec_string(&o.left).map_err(|e| e.to_string())?;
            let right = spec::from_spec_string(&o.right).map_err(|e| e.to_string())?;
            let grid = Grid::quantile_spaced(left.univariate(), o.grid_points)
                .map_err(|e| e.to_string())?;
            let report = check_order(kind, left.univariate(), right.univariate(), &grid, o.tol)
                .map_err(|e| e.to_string())?;
            let holds = report.holds;
            let envelope = Envelope {
                config: CheckConfig {
                    grid_points: o.grid_points,
                    tol: o.tol,
                    left: left.label(),
                    right: Some(right.label()),
                },
                report,
            };
            emit(o.out.as_deref(), &(to_json(&envelope) + "\n"))?;
            Ok(if holds { 0 } else { 1 })
        }
        CheckKind::Aging(a) => {
            let dist = a.dist.build().map_err(|e| e.to_string())?;
            let grid = Grid::quantile_spaced(dist.univariate(), a.grid_points)
                .map_err(|e| e.to_string())?;
            let report = classify_aging(dist.univariate(), &grid, a.tol)
                .map_err(|e| e.to_string())?;
            let any_holds = report.ihr.holds
                || report.dhr.holds
                || report.ihra.holds
                || report.dhra.holds
                || report.nbu.holds
                || report.nwu.holds;
            let envelope = Envelope {
                config: CheckConfig {
                    grid_points: a.grid_points,
                    tol: a.tol,
                    left: dist.label(),
                    right: None,
                },
                report,
            };
            emit(a.out.as_deref(), &(to_json(&envelope) + "\n"))?;
            Ok(if any_holds { 0 } else { 1 })
        }
    }
}

fn cmd_copula_grid(args: CopulaGridArgs) -> CmdResult {
    let base = parse_coupling(&args.coupling)?;
    let c = TransformedCopula::new(base, args.lambda).map_err(|e| e.to_string())?;
    if args.resolution < 3 {
        return Err("--resolution must be at least 3".into());
    }
    let n = args.resolution;
    let mut lines = vec!["u,v,value".to_string()];
    for i in 0..=n {
        for j in 0..=n {
            let (u, v) = (i as f64 / n as f64, j as f64 / n as f64);
            lines.push(csv_row(&[fmt_f64(u), fmt_f64(v), fmt_f64(c.value(u, v))]));
        }
    }
    emit(args.out.as_deref(), &(lines.join("\n") + "\n"))?;
    if args.certify {
        let report = copula_validity(&c, n, 1e-12).map_err(|e| e.to_string())?;
        if !report.valid {
            eprintln!("validity violation: {:?}", report.violation);
            return Ok(1);
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct VerifyReport {
    config: suite::SuiteConfig,
    scope: String,
    criteria: Vec<suite::CriterionResult>,
    all_pass: bool,
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    if args.scope == "ks" {
        return cmd_verify_ks(args);
    }
    let criteria = match args.scope.as_str() {
        "all" => suite::run_all(),
        "univariate" => suite::run_univariate(),
        "bivariate" => suite::run_bivariate(),
        other => return Err(format!("unknown scope `{other}`")),
    };
    let all_pass = criteria.iter().all(|c| c.pass);
    let content = if args.json {
        to_json(&VerifyReport {
            config: suite::config(),
            scope: args.scope.clone(),
            criteria: criteria.clone(),
            all_pass,
        }) + "\n"
    } else {
        let mut lines: Vec<String> = criteria
            .iter()
            .map(|c| {
                format!(
                    "{}  {:<4} {:<42} margin {:+.3e}  [{}]",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.id,
                    c.label,
                    c.margin,
                    c.detail
                )
            })
            .collect();
        lines.push(format!(
            "{}: {}/{} criteria passed",
            if all_pass { "OK" } else { "FAILED" },
            criteria.iter().filter(|c| c.pass).count(),
            criteria.len()
        ));
        lines.join("\n") + "\n"
    };
    emit(args.out.as_deref(), &content)?;
    Ok(if all_pass { 0 } else { 1 })
}

/// Kolmogorov–Smirnov check of values piped on stdin (one per line, a
/// `value` header tolerated) against the cdf of the given distribution,
/// at the 5% threshold 1.36/√n.
fn cmd_verify_ks(args: VerifyArgs) -> CmdResult {
    use std::io::Read;
    let dist = args.dist.build().map_err(|e| e.to_string())?;
    let mut input = String::new();
    std::io::stdin()
        .read_to_string(&mut input)
        .map_err(|e| e.to_string())?;
    let values: Vec<f64> = input
        .split_whitespace()
        .filter(|tok| *tok != "value")
        .map(|tok| {
            tok.parse::<f64>()
                .map_err(|_| format!("cannot parse sample value `{tok}`"))
        })
        .collect::<Result<_, String>>()?;
    if values.is_empty() {
        return Err("no sample values on stdin".into());
    }
    let n = values.len();
    let batch = ordmix::SampleBatch::new(values, 0);
    let d = dist.univariate();
    let gof = ordmix::ks_statistic(&batch, |x| d.cdf(x)).map_err(|e| e.to_string())?;
    let content = if args.json {
        to_json(&Envelope {
            config: CheckConfig {
                grid_points: n,
                tol: gof.threshold,
                left: dist.label(),
                right: None,
            },
            report: gof,
        }) + "\n"
    } else {
        format!(
            "{}  ks statistic {:.6} (threshold {:.6}, n = {})\n",
            if gof.pass { "PASS" } else { "FAIL" },
            gof.statistic,
            gof.threshold,
            n
        )
    };
    emit(args.out.as_deref(), &content)?;
    Ok(if gof.pass { 0 } else { 1 })
}
