//! `svpq` command-line entry point.

mod bench;
mod exit;
mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use svp_core::bdd::{bddp_preprocess, bddp_query, BddConfig, BddpAdvice};
use svp_core::enumeration::enum_svp;
use svp_core::lattice::{gen_lattice, io, lll_reduce, Basis, LatticeKind, LatticeVector, DEFAULT_DELTA};
use svp_core::oracle::brute_force_svp;
use svp_core::quantum::{qsvp, FixedLayout};

use exit::CliError;
use report::{fingerprint, ConfigEcho, RunResult, Timings};

#[derive(Parser, Debug)]
#[command(name = "svpq", version, about = "Space-efficient SVP via BDD with preprocessing")]
struct Cli {
    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a random or structured basis.
    Gen(GenArgs),
    /// Find a shortest nonzero vector.
    Svp(SvpArgs),
    /// Decode one target with BDD advice.
    Bdd(BddArgs),
    /// Build BDD advice and save it as JSON.
    Preprocess(PreprocessArgs),
    /// Sweep dimensions and write a CSV of per-run counts.
    Bench(bench::BenchArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Uniform,
    Knapsack,
    ScaledIdentity,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(value_enum)]
    kind: Kind,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 8)]
    bits: u32,
    #[arg(long, default_value_t = 1)]
    scale: i64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    Bruteforce,
    Enump,
    Qsim,
}

impl Mode {
    pub(crate) fn name(self) -> &'static str {
        match self {
            Mode::Bruteforce => "bruteforce",
            Mode::Enump => "enump",
            Mode::Qsim => "qsim",
        }
    }
}

#[derive(Args, Debug, Clone)]
pub(crate) struct SolveOpts {
    #[arg(long, default_value_t = 10)]
    pub kappa: u32,
    /// Dual samples in the advice (default: max(1000, 200 n)).
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
struct SvpArgs {
    basis: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Enump)]
    mode: Mode,
    #[command(flatten)]
    opts: SolveOpts,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BddArgs {
    basis: PathBuf,
    /// Comma-separated coordinates.
    #[arg(long, allow_hyphen_values = true)]
    target: String,
    /// Load advice instead of preprocessing.
    #[arg(long)]
    advice: Option<PathBuf>,
    #[command(flatten)]
    opts: SolveOpts,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PreprocessArgs {
    basis: PathBuf,
    #[command(flatten)]
    opts: SolveOpts,
    #[arg(long)]
    out: PathBuf,
}

pub(crate) fn config_for(n: usize, opts: &SolveOpts) -> BddConfig {
    let cfg = BddConfig::for_dim(n);
    match opts.samples {
        Some(s) => cfg.with_samples(s),
        None => cfg,
    }
}

fn read_basis(path: &Path) -> Result<Basis, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    io::parse_basis(&text).map_err(|e| CliError::from_core(e).context(&path.display().to_string()))
}

fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn over_input(input: &Basis, v: LatticeVector) -> LatticeVector {
    let coeffs = input.coefficients_of(&v.coords);
    LatticeVector { coords: v.coords, coeffs }
}

/// Solves one instance; shared with `bench`.
pub(crate) fn solve(b: &Basis, mode: Mode, opts: &SolveOpts) -> Result<RunResult, CliError> {
    let n = b.n();
    let cfg = config_for(n, opts);
    let started = Instant::now();
    let reduced = lll_reduce(b, DEFAULT_DELTA).map_err(CliError::from_core)?;
    let reduce_ms = started.elapsed().as_secs_f64() * 1e3;
    let mut result = RunResult::new("svp", b, opts.seed);
    result.mode = Some(mode.name().into());
    result.config = Some(ConfigEcho::new(&cfg, mode == Mode::Qsim, opts.kappa));
    let mut timings = Timings { reduce_ms, ..Default::default() };
    match mode {
        Mode::Bruteforce => {
            let t = Instant::now();
            let v = brute_force_svp(&reduced).map_err(CliError::from_core)?;
            timings.solve_ms = t.elapsed().as_secs_f64() * 1e3;
            result.set_vector(over_input(b, v));
        }
        Mode::Enump => {
            let r = enum_svp(&reduced, &cfg, opts.seed).map_err(CliError::from_core)?;
            timings.preprocess_ms = r.preprocess_ms;
            timings.solve_ms = r.search_ms;
            result.stats = Some(r.stats);
            result.set_vector(over_input(b, r.vector));
        }
        Mode::Qsim => {
            let out = qsvp(&reduced, &cfg, opts.kappa, FixedLayout::default(), opts.seed).map_err(CliError::from_core)?;
            timings.preprocess_ms = out.result.preprocess_ms;
            timings.solve_ms = out.result.search_ms;
            result.stats = Some(out.result.stats);
            result.qenum_calls = Some(out.qenum_calls);
            result.ledger = Some(out.ledger);
            result.set_vector(over_input(b, out.result.vector));
        }
    }
    result.timings = timings;
    Ok(result)
}

fn parse_target(text: &str, n: usize) -> Result<Vec<f64>, CliError> {
    let t: Vec<f64> = text
        .split(',')
        .map(|x| x.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Input(format!("target {text:?}: {e}")))?;
    if t.len() != n {
        return Err(CliError::Input(format!("target has {} coordinates, basis has rank {n}", t.len())));
    }
    Ok(t)
}

fn run_bdd(args: &BddArgs) -> Result<RunResult, CliError> {
    let b = read_basis(&args.basis)?;
    let t = parse_target(&args.target, b.n())?;
    let mut result = RunResult::new("bdd", &b, args.opts.seed);
    let mut timings = Timings::default();
    let start = Instant::now();
    let advice = match &args.advice {
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
            let a: BddpAdvice =
                serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
            if !svp_core::lattice::exact::same_lattice(a.basis().vectors(), b.vectors()) {
                return Err(CliError::Input("advice was built for a different lattice".into()));
            }
            a
        }
        None => bddp_preprocess(&b, &config_for(b.n(), &args.opts), args.opts.seed).map_err(CliError::from_core)?,
    };
    timings.preprocess_ms = start.elapsed().as_secs_f64() * 1e3;
    result.config = Some(ConfigEcho::new(&advice.config, false, 0));
    result.target = Some(t.clone());
    let start = Instant::now();
    match bddp_query(&advice, &t) {
        Ok(v) => {
            let dist = v.to_real().iter().zip(&t).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
            result.distance = Some(dist);
            result.status = "ok".into();
            result.set_vector(over_input(&b, v));
        }
        Err(svp_core::Error::Divergence { value }) => {
            result.status = "decode-failure".into();
            result.message = Some(format!("gradient ascent diverged (|f_W| = {value:e})"));
        }
        Err(e) => return Err(CliError::from_core(e)),
    }
    timings.solve_ms = start.elapsed().as_secs_f64() * 1e3;
    result.timings = timings;
    Ok(result)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Gen(a) => {
            let kind = match a.kind {
                Kind::Uniform => LatticeKind::Uniform { bits: a.bits },
                Kind::Knapsack => LatticeKind::Knapsack { bits: a.bits },
                Kind::ScaledIdentity => LatticeKind::ScaledIdentity { scale: a.scale },
            };
            if a.n == 0 {
                return Err(CliError::Input("n must be positive".into()));
            }
            let b = gen_lattice(kind, a.n, a.seed);
            emit(&io::to_text(&b), a.out.as_deref()).map_err(CliError::Io)
        }
        Command::Svp(a) => {
            let b = read_basis(&a.basis)?;
            let r = solve(&b, a.mode, &a.opts)?;
            emit(&r.render(a.json), a.out.as_deref()).map_err(CliError::Io)
        }
        Command::Bdd(a) => {
            let r = run_bdd(&a)?;
            emit(&r.render(a.json), a.out.as_deref()).map_err(CliError::Io)
        }
        Command::Preprocess(a) => {
            let b = read_basis(&a.basis)?;
            let advice =
                bddp_preprocess(&b, &config_for(b.n(), &a.opts), a.opts.seed).map_err(CliError::from_core)?;
            let json = serde_json::to_string(&advice).expect("advice is serializable");
            emit(&json, Some(&a.out)).map_err(CliError::Io)?;
            log::info!("advice for {} written to {}", fingerprint(&b), a.out.display());
            Ok(())
        }
        Command::Bench(a) => bench::run(&a),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("svpq: cannot size thread pool: {e}");
        }
    }
    let json = matches!(&cli.command, Command::Svp(SvpArgs { json: true, .. }) | Command::Bdd(BddArgs { json: true, .. }));
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if json {
                println!("{}", e.to_json());
            }
            eprintln!("svpq: {e}");
            ExitCode::from(e.code())
        }
    }
}
