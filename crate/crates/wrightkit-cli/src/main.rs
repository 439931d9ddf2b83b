//! Command-line front end for the wrightkit numerics library.
//!
//! Three subcommands: `eval` samples one of the library's functions over a
//! grid and emits a table; `figures` emits the data tables behind the nine
//! built-in figure layouts; `verify` runs the self-verification suites.
//!
//! Exit codes: 0 success, 1 verification failure (or an output-file I/O
//! problem), 2 invalid parameters, 3 evaluation failure (the message names
//! the failing operation).

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wrightkit::special::mittag_leffler;
use wrightkit::table::fmt_float;
use wrightkit::{
    figure_table, four_sisters, green_cauchy, green_signalling, m_two_var, run_all_suites,
    run_suite, stable_pdf, three_sisters, wright_f, wright_m, wright_w, AuxIndex, DensityValue,
    EvalConfig, EvalResult, GreenSpec, GridScale, GridSpec, Problem, StableParams, SuiteReport,
    Table, WrightParams, SUITE_IDS,
};

#[derive(Parser)]
#[command(
    name = "wrightkit",
    version,
    about = "Evaluate Wright-type special functions, diffusion-wave kernels, \
             and stable densities; reproduce the built-in figure tables; run \
             the verification suites."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a function over a grid and emit a table
    #[command(after_help = FUNCTION_HELP)]
    Eval(EvalArgs),
    /// Emit the data table behind one of the nine built-in figures
    Figures(FiguresArgs),
    /// Run the verification suites and report pass/fail per check
    #[command(after_help = SUITE_HELP)]
    Verify(VerifyArgs),
}

const FUNCTION_HELP: &str = "\
functions and their parameters:
  wright            --lambda and --mu, --grid over the argument
  m                 --nu, --grid over the argument
  f                 --nu, --grid over the argument
  ml                --alpha (order), optional --mu (second index, default 1),
                    --grid over the argument
  green-cauchy      --nu; --grid over x with --t (default 1), or
                    --grid-t over t with --x
  green-signalling  --nu; same grid rules, x >= 0
  sisters3          --grid-t over t with --x (default 1), or
                    --grid over x >= 0 with --t (default 1)
  sisters4          --nu plus the sisters3 grid rules
  stable            --alpha, optional --theta (default 0), --grid over x
  mvar              --nu; --grid over x with --t (default 1), or
                    --grid-t over t with --x";

const SUITE_HELP: &str = "\
suite ids: closed-forms, aux-relation, laplace-pairs, sisters, reciprocity,
moments, charfn, composition, stable, frac-ops, asymptotics, figures,
or \"all\" (the default).";

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Function {
    Wright,
    M,
    F,
    Ml,
    GreenCauchy,
    GreenSignalling,
    Sisters3,
    Sisters4,
    Stable,
    Mvar,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    /// Write to this path instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct EvalArgs {
    /// Function to evaluate
    #[arg(value_enum)]
    function: Function,
    /// Auxiliary-function index, 0 < nu < 1 (0 allowed where noted)
    #[arg(long, allow_negative_numbers = true)]
    nu: Option<f64>,
    /// Stability index (stable) or first index (ml)
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// Skewness parameter of a stable density
    #[arg(long, allow_negative_numbers = true)]
    theta: Option<f64>,
    /// Second index: of the general Wright function, or of ml (default 1)
    #[arg(long, allow_negative_numbers = true)]
    mu: Option<f64>,
    /// First index of the general Wright function (> -1)
    #[arg(long, allow_negative_numbers = true)]
    lambda: Option<f64>,
    /// Fixed spatial coordinate for time sweeps
    #[arg(long, allow_negative_numbers = true)]
    x: Option<f64>,
    /// Fixed time for spatial sweeps (default 1)
    #[arg(long, allow_negative_numbers = true)]
    t: Option<f64>,
    /// Laplace abscissa (reserved; no current function reads it)
    #[arg(long, allow_negative_numbers = true)]
    s: Option<f64>,
    /// Abscissa grid, min:max:count
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    /// Time grid, min:max:count (for functions of x and t, sweep t instead)
    #[arg(long = "grid-t", allow_hyphen_values = true)]
    grid_t: Option<String>,
    /// Space grid points logarithmically
    #[arg(long)]
    log: bool,
    /// Override both relative tolerances (series and quadrature)
    #[arg(long, allow_negative_numbers = true)]
    tol: Option<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct FiguresArgs {
    /// Figure number, 1 through 9
    id: u32,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite id, or "all"
    #[arg(default_value = "all")]
    suite: String,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
    /// Write the report to this path instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failure carrying its process exit code.
struct Failure {
    code: u8,
    message: String,
}

type CliResult<T> = Result<T, Failure>;

fn invalid(message: impl std::fmt::Display) -> Failure {
    Failure { code: 2, message: message.to_string() }
}

fn broken(message: impl std::fmt::Display) -> Failure {
    Failure { code: 3, message: message.to_string() }
}

fn io_failure(message: impl std::fmt::Display) -> Failure {
    Failure { code: 1, message: message.to_string() }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> CliResult<u8> {
    match cli.cmd {
        Cmd::Eval(args) => cmd_eval(args),
        Cmd::Figures(args) => cmd_figures(args),
        Cmd::Verify(args) => cmd_verify(args),
    }
}

// ---------------------------------------------------------------------------
// eval

/// Which coordinate a two-variable function is swept along.
enum Sweep {
    /// Sweep the spatial argument at a fixed time.
    OverX { grid: GridSpec, t: f64 },
    /// Sweep time at a fixed spatial argument.
    OverT { grid: GridSpec, x: f64 },
}

fn cmd_eval(args: EvalArgs) -> CliResult<u8> {
    let mut cfg = EvalConfig::from_env().map_err(invalid)?;
    if let Some(tol) = args.tol {
        if !(tol > 1e-16 && tol < 1.0) {
            return Err(invalid(format!("--tol {tol} out of range (1e-16, 1)")));
        }
        cfg.series.rel_tol = tol;
        cfg.quadrature.rel_tol = tol;
    }
    let table = build_eval_table(&args, &cfg)?;
    write_table(&table, &args.output)
}

fn scale_of(args: &EvalArgs) -> GridScale {
    if args.log {
        GridScale::Logarithmic
    } else {
        GridScale::Linear
    }
}

/// The plain abscissa grid for functions of a single argument.
fn single_grid(args: &EvalArgs, function: &str) -> CliResult<GridSpec> {
    if args.grid_t.is_some() {
        return Err(invalid(format!(
            "{function} takes its argument from --grid; --grid-t does not apply"
        )));
    }
    let text = args
        .grid
        .as_deref()
        .ok_or_else(|| invalid(format!("{function} needs --grid min:max:count")))?;
    GridSpec::parse(text, scale_of(args)).map_err(invalid)
}

/// The sweep for functions of (x, t): exactly one of --grid / --grid-t.
fn xt_sweep(args: &EvalArgs, function: &str) -> CliResult<Sweep> {
    match (&args.grid, &args.grid_t) {
        (Some(_), Some(_)) => Err(invalid(format!(
            "{function}: give either --grid (sweep x) or --grid-t (sweep t), not both"
        ))),
        (Some(text), None) => Ok(Sweep::OverX {
            grid: GridSpec::parse(text, scale_of(args)).map_err(invalid)?,
            t: args.t.unwrap_or(1.0),
        }),
        (None, Some(text)) => Ok(Sweep::OverT {
            grid: GridSpec::parse(text, scale_of(args)).map_err(invalid)?,
            x: args.x.ok_or_else(|| {
                invalid(format!("{function} with --grid-t needs --x to fix the position"))
            })?,
        }),
        (None, None) => Err(invalid(format!(
            "{function} needs --grid (sweep x) or --grid-t (sweep t)"
        ))),
    }
}

fn require(opt: Option<f64>, flag: &str, function: &str) -> CliResult<f64> {
    opt.ok_or_else(|| invalid(format!("{function} needs --{flag}")))
}

fn broken_at(e: wrightkit::Error, abscissa: f64) -> Failure {
    broken(format!("{e} (at abscissa {})", fmt_float(abscissa)))
}

/// Evaluate a single-valued function over a grid into an eval table.
fn eval_rows(
    cfg: &EvalConfig,
    grid: &GridSpec,
    mut f: impl FnMut(f64) -> wrightkit::Result<EvalResult>,
) -> CliResult<Table> {
    let mut table = Table::for_eval(cfg);
    for x in grid.points() {
        let r = f(x).map_err(|e| broken_at(e, x))?;
        table.push_eval(x, &r);
    }
    Ok(table)
}

fn build_eval_table(args: &EvalArgs, cfg: &EvalConfig) -> CliResult<Table> {
    match args.function {
        Function::Wright => {
            let lambda = require(args.lambda, "lambda", "wright")?;
            let mu = require(args.mu, "mu", "wright")?;
            let p = WrightParams::new(lambda, mu).map_err(invalid)?;
            let grid = single_grid(args, "wright")?;
            eval_rows(cfg, &grid, |z| wright_w(&p, z, &cfg.series))
        }
        Function::M => {
            let nu = AuxIndex::new(require(args.nu, "nu", "m")?).map_err(invalid)?;
            let grid = single_grid(args, "m")?;
            eval_rows(cfg, &grid, |x| wright_m(nu, x, cfg))
        }
        Function::F => {
            let nu = AuxIndex::new(require(args.nu, "nu", "f")?).map_err(invalid)?;
            let grid = single_grid(args, "f")?;
            eval_rows(cfg, &grid, |z| wright_f(nu, z, cfg))
        }
        Function::Ml => {
            let alpha = require(args.alpha, "alpha", "ml")?;
            let beta = args.mu.unwrap_or(1.0);
            let grid = single_grid(args, "ml")?;
            eval_rows(cfg, &grid, |x| {
                mittag_leffler(alpha, beta, x, &cfg.series, &cfg.quadrature)
            })
        }
        Function::GreenCauchy => green_table(args, cfg, Problem::Cauchy, "green-cauchy"),
        Function::GreenSignalling => {
            green_table(args, cfg, Problem::Signalling, "green-signalling")
        }
        Function::Sisters3 => sisters3_table(args, cfg),
        Function::Sisters4 => sisters4_table(args, cfg),
        Function::Stable => {
            let alpha = require(args.alpha, "alpha", "stable")?;
            let theta = args.theta.unwrap_or(0.0);
            let p = StableParams::validate(alpha, theta).map_err(invalid)?;
            if alpha == 1.0 && theta.abs() == 1.0 {
                return Err(invalid(
                    "this (alpha, theta) corner is a unit point mass, not a smooth \
                     density; there is no density table to emit",
                ));
            }
            let grid = single_grid(args, "stable")?;
            eval_rows(cfg, &grid, |x| match stable_pdf(p, x, cfg)? {
                DensityValue::Smooth(r) => Ok(r),
                DensityValue::PointMass { location, .. } => Err(wrightkit::Error::domain(
                    "stable density",
                    format!("degenerate point mass at {location}"),
                )),
            })
        }
        Function::Mvar => {
            let nu = AuxIndex::new(require(args.nu, "nu", "mvar")?).map_err(invalid)?;
            match xt_sweep(args, "mvar")? {
                Sweep::OverX { grid, t } => eval_rows(cfg, &grid, |x| m_two_var(nu, x, t, cfg)),
                Sweep::OverT { grid, x } => eval_rows(cfg, &grid, |t| m_two_var(nu, x, t, cfg)),
            }
        }
    }
}

fn green_table(
    args: &EvalArgs,
    cfg: &EvalConfig,
    problem: Problem,
    name: &str,
) -> CliResult<Table> {
    let nu = require(args.nu, "nu", name)?;
    let spec = GreenSpec::new(problem, nu, 1.0).map_err(invalid)?;
    let green = match problem {
        Problem::Cauchy => green_cauchy,
        Problem::Signalling => green_signalling,
    };
    match xt_sweep(args, name)? {
        Sweep::OverX { grid, t } => eval_rows(cfg, &grid, |x| green(&spec, x, t, cfg)),
        Sweep::OverT { grid, x } => eval_rows(cfg, &grid, |t| green(&spec, x, t, cfg)),
    }
}

fn sisters3_table(args: &EvalArgs, cfg: &EvalConfig) -> CliResult<Table> {
    let mut table = Table::for_curves(cfg);
    let push = |table: &mut Table, abscissa: f64, a: f64, t: f64| -> CliResult<()> {
        let (phi, psi, chi) = three_sisters(a, t).map_err(|e| broken_at(e, abscissa))?;
        table.push_curve_eval("phi", abscissa, &phi);
        table.push_curve_eval("psi", abscissa, &psi);
        table.push_curve_eval("chi", abscissa, &chi);
        Ok(())
    };
    match sisters_sweep(args, "sisters3")? {
        Sweep::OverX { grid, t } => {
            for a in grid.points() {
                push(&mut table, a, a, t)?;
            }
        }
        Sweep::OverT { grid, x } => {
            for t in grid.points() {
                push(&mut table, t, x, t)?;
            }
        }
    }
    Ok(table)
}

fn sisters4_table(args: &EvalArgs, cfg: &EvalConfig) -> CliResult<Table> {
    let nu = AuxIndex::new(require(args.nu, "nu", "sisters4")?).map_err(invalid)?;
    let mut table = Table::for_curves(cfg);
    let push = |table: &mut Table, abscissa: f64, a: f64, t: f64| -> CliResult<()> {
        let members = four_sisters(nu, a, t, cfg).map_err(|e| broken_at(e, abscissa))?;
        for (mu, r) in &members {
            table.push_curve_eval(&format!("mu={}", fmt_float(*mu)), abscissa, r);
        }
        Ok(())
    };
    match sisters_sweep(args, "sisters4")? {
        Sweep::OverX { grid, t } => {
            for a in grid.points() {
                push(&mut table, a, a, t)?;
            }
        }
        Sweep::OverT { grid, x } => {
            for t in grid.points() {
                push(&mut table, t, x, t)?;
            }
        }
    }
    Ok(table)
}

/// Sisters sweeps default the fixed position to 1 so that a bare --grid-t
/// works, matching the common one-liner usage.
fn sisters_sweep(args: &EvalArgs, function: &str) -> CliResult<Sweep> {
    match (&args.grid, &args.grid_t) {
        (None, Some(text)) => Ok(Sweep::OverT {
            grid: GridSpec::parse(text, scale_of(args)).map_err(invalid)?,
            x: args.x.unwrap_or(1.0),
        }),
        _ => xt_sweep(args, function),
    }
}

// ---------------------------------------------------------------------------
// figures

fn cmd_figures(args: FiguresArgs) -> CliResult<u8> {
    let cfg = EvalConfig::from_env().map_err(invalid)?;
    let table = figure_table(args.id, &cfg).map_err(invalid)?;
    write_table(&table, &args.output)
}

// ---------------------------------------------------------------------------
// verify

fn cmd_verify(args: VerifyArgs) -> CliResult<u8> {
    let cfg = EvalConfig::from_env().map_err(invalid)?;
    let reports: Vec<SuiteReport> = if args.suite == "all" {
        run_all_suites(&cfg)
    } else {
        vec![run_suite(&args.suite, &cfg).map_err(|_| {
            invalid(format!(
                "unknown suite \"{}\"; known: {}, or \"all\"",
                args.suite,
                SUITE_IDS.join(", ")
            ))
        })?]
    };
    let all_pass = reports.iter().all(|r| r.pass);

    let body = if args.json {
        let mut s = serde_json::to_string_pretty(&reports)
            .map_err(|e| io_failure(format!("cannot encode report: {e}")))?;
        s.push('\n');
        s
    } else {
        let mut s = String::new();
        for r in &reports {
            s.push_str(&r.render_text());
        }
        if args.suite == "all" {
            let passed = reports.iter().filter(|r| r.pass).count();
            s.push_str(&format!(
                "overall: {} ({passed}/{} suites)\n",
                if all_pass { "PASS" } else { "FAIL" },
                reports.len()
            ));
        }
        s
    };
    write_text(&body, &args.out)?;
    Ok(if all_pass { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// output plumbing

fn write_table(table: &Table, output: &OutputArgs) -> CliResult<u8> {
    let body = match output.format {
        Format::Csv => table.to_csv(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(table)
                .map_err(|e| io_failure(format!("cannot encode table: {e}")))?;
            s.push('\n');
            s
        }
    };
    write_text(&body, &output.out)?;
    Ok(0)
}

fn write_text(body: &str, out: &Option<PathBuf>) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| io_failure(format!("cannot write {}: {e}", path.display()))),
        None => match std::io::stdout().write_all(body.as_bytes()) {
            // a downstream reader (e.g. `head`) may close the pipe early;
            // that is not a failure of ours
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            r => r.map_err(|e| io_failure(format!("cannot write to stdout: {e}"))),
        },
    }
}
