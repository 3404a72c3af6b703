use std::path::PathBuf;
use std::time::Instant;

use clap::Args;
use serde::Serialize;
use svp_core::lattice::{gen_lattice, LatticeKind};
use svp_core::oracle::brute_force_svp;
use svp_core::seed::{derive_seed, Stream};

use crate::exit::CliError;
use crate::{solve, Mode, SolveOpts};

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 4)]
    n_min: usize,
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    #[arg(long, default_value_t = 5)]
    trials: usize,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "bruteforce,enump,qsim")]
    modes: Vec<Mode>,
    #[arg(long, default_value_t = 8)]
    bits: u32,
    #[command(flatten)]
    opts: SolveOpts,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Serialize)]
struct Row {
    n: usize,
    trial: usize,
    mode: &'static str,
    norm_ok: bool,
    od_queries: u64,
    toffoli_estimate: u64,
    wall_ms: f64,
}

pub fn run(a: &BenchArgs) -> Result<(), CliError> {
    if a.n_min == 0 || a.n_min > a.n_max {
        return Err(CliError::Input(format!("empty dimension range {}..{}", a.n_min, a.n_max)));
    }
    let mut w = csv::Writer::from_path(&a.out).map_err(|e| CliError::Io(e.into()))?;
    for n in a.n_min..=a.n_max {
        for trial in 0..a.trials {
            let inst = derive_seed(a.opts.seed, Stream::Index((n as u64) << 32 | trial as u64));
            let b = gen_lattice(LatticeKind::Uniform { bits: a.bits }, n, inst);
            let truth = brute_force_svp(&b).map_err(CliError::from_core)?.norm_sq();
            for &mode in &a.modes {
                let opts = SolveOpts { seed: inst, ..a.opts.clone() };
                let start = Instant::now();
                let r = solve(&b, mode, &opts)?;
                let ledger = r.ledger.clone().unwrap_or_default();
                w.serialize(Row {
                    n,
                    trial,
                    mode: mode.name(),
                    norm_ok: r.norm_sq == Some(truth),
                    od_queries: ledger.od_queries,
                    toffoli_estimate: ledger.toffoli_estimate,
                    wall_ms: start.elapsed().as_secs_f64() * 1e3,
                })
                .map_err(|e| CliError::Io(e.into()))?;
            }
        }
    }
    w.flush().map_err(|e| CliError::Io(e.into()))?;
    Ok(())
}
