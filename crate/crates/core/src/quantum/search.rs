use std::time::Instant;

use log::{debug, info};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::filter::{encode_saturating, filter_mark, filter_toffoli, threshold_code, FixedLayout};
use super::grover::{grover_measure_sim, CostModel, GroverRun, QueryLedger};
use crate::bdd::{bddp_preprocess, BddConfig, BddpAdvice};
use crate::enumeration::{finish_vector, svp_candidates, CosetStats, SvpResult};
use crate::error::{Error, Result};
use crate::lattice::{Basis, CosetIndex, LatticeVector};
use crate::seed::{rng_for, Stream};

/// Candidates `f(s)` for all `s in Z_3^n`, evaluated once.
#[derive(Debug, Clone)]
pub struct CandidateTable {
    pub n: usize,
    /// `None` marks a coset whose decoding failed.
    pub vectors: Vec<Option<LatticeVector>>,
    pub norms: Vec<Option<f64>>,
    pub ops_per_query: u64,
}

impl CandidateTable {
    pub fn build(advice: &BddpAdvice) -> Self {
        let vectors: Vec<Option<LatticeVector>> = svp_candidates(advice).into_iter().map(|r| r.ok()).collect();
        let norms = vectors.iter().map(|v| v.as_ref().map(|v| v.norm())).collect();
        CandidateTable {
            n: advice.n(),
            vectors,
            norms,
            ops_per_query: advice.ops_per_query(),
        }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn stats(&self) -> CosetStats {
        let failed = self.vectors.iter().filter(|v| v.is_none()).count() as u64;
        let zero = self.vectors.iter().flatten().filter(|v| v.is_zero()).count() as u64;
        CosetStats {
            cosets: self.len() as u64,
            decoded: self.len() as u64 - failed,
            failed,
            zero,
        }
    }
}

/// `O_d` for an absolute threshold `d'`: marks `s` iff `0 < ||f(s)|| < d'`.
/// Norms are encoded in units of `d'`, so the filter threshold is `2^0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleSpec {
    pub threshold: f64,
    pub layout: FixedLayout,
    pub cost: CostModel,
}

impl OracleSpec {
    pub fn new(threshold: f64, layout: FixedLayout, ubddp_ops: u64) -> Result<Self> {
        if !(threshold > 0.0 && threshold.is_finite()) {
            return Err(Error::InvalidParameter(format!("oracle threshold d' = {threshold} must be > 0")));
        }
        Ok(OracleSpec {
            threshold,
            layout,
            cost: CostModel {
                ubddp_ops,
                filter_toffoli: filter_toffoli(layout),
            },
        })
    }

    pub fn description(&self) -> String {
        format!("0 < ||f(s)|| < {:.6}", self.threshold)
    }

    pub fn marks(&self, norm: f64) -> Result<bool> {
        let scale = self.threshold;
        let v = encode_saturating(norm, self.layout, scale)?;
        filter_mark(&v, &threshold_code(self.layout, 0, scale)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedSet {
    pub ranks: Vec<usize>,
    /// Cosets left unmarked because decoding failed.
    pub failed: usize,
}

pub fn oracle_marked_set(table: &CandidateTable, oracle: &OracleSpec) -> Result<MarkedSet> {
    let mut ranks = Vec::new();
    let mut failed = 0;
    for (rank, norm) in table.norms.iter().enumerate() {
        match norm {
            None => failed += 1,
            Some(x) => {
                if oracle.marks(*x)? {
                    ranks.push(rank);
                }
            }
        }
    }
    Ok(MarkedSet { ranks, failed })
}

/// Iteration counts `floor(3^(n/2)), then halving while >= 1`.
pub fn initial_schedule(n: usize) -> Vec<u64> {
    let mut t = 3f64.powf(n as f64 / 2.0).floor() as u64;
    let mut out = Vec::new();
    while t >= 1 {
        out.push(t);
        t /= 2;
    }
    out
}

/// One `d'`-search: `kappa` passes over the halving schedule. Returns the
/// rank and norm of the shortest marked outcome, or `None` if nothing under
/// `d'` was seen.
pub fn qenum_p<R: Rng + ?Sized>(
    table: &CandidateTable,
    oracle: &OracleSpec,
    kappa: u32,
    rng: &mut R,
    ledger: &mut QueryLedger,
) -> Result<Option<(usize, f64)>> {
    if kappa == 0 {
        return Err(Error::InvalidParameter("kappa must be >= 1".into()));
    }
    let marked = oracle_marked_set(table, oracle)?;
    let n_states = table.len() as u64;
    let mut candidate: Option<(usize, f64)> = None;
    for _ in 0..kappa {
        for &t in &initial_schedule(table.n) {
            let run = GroverRun::new(n_states, marked.ranks.len() as u64, t);
            if !grover_measure_sim(&run, rng, ledger) {
                continue;
            }
            let rank = marked.ranks[rng.gen_range(0..marked.ranks.len())];
            let norm = table.norms[rank].expect("marked cosets are decoded");
            if candidate.is_none_or(|(_, c)| norm < c) {
                candidate = Some((rank, norm));
            }
        }
    }
    Ok(candidate.filter(|&(_, c)| c <= oracle.threshold))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QsvpOutput {
    pub result: SvpResult,
    pub ledger: QueryLedger,
    /// Successive thresholds `d'`, starting from the random initial candidate.
    pub thresholds: Vec<f64>,
    pub qenum_calls: u64,
}

/// Repeated `d'`-searches with shrinking threshold, at most about
/// `kappa * n * log2 3` of them.
pub fn qsvp(b: &Basis, cfg: &BddConfig, kappa: u32, layout: FixedLayout, seed: u64) -> Result<QsvpOutput> {
    let start = Instant::now();
    let advice = bddp_preprocess(b, cfg, seed)?;
    let preprocess_ms = start.elapsed().as_secs_f64() * 1e3;
    let search = Instant::now();
    let table = CandidateTable::build(&advice);
    let n = b.n();
    let mut rng = rng_for(seed, Stream::Solve);
    let nonzero = |r: usize| table.vectors[r].as_ref().is_some_and(|v| !v.is_zero());
    let mut current = (0..table.len())
        .map(|_| rng.gen_range(0..table.len()))
        .find(|&r| nonzero(r))
        .ok_or(Error::Degenerate)?;
    let mut d = table.norms[current].expect("nonzero candidate");
    let probe = OracleSpec::new(d, layout, table.ops_per_query)?;
    let mut ledger = QueryLedger::new(probe.cost, seed);
    let mut thresholds = vec![d];
    let limit = f64::from(kappa) * n as f64 * 3f64.log2();
    let mut timer = 0u64;
    while timer as f64 <= limit {
        let oracle = OracleSpec::new(d, layout, table.ops_per_query)?;
        let found = qenum_p(&table, &oracle, kappa, &mut rng, &mut ledger)?;
        timer += 1;
        match found {
            Some((rank, norm)) => {
                debug!("qsvp step {timer}: d' {d:.4} -> {norm:.4}");
                current = rank;
                d = norm;
                thresholds.push(d);
            }
            None => break,
        }
    }
    ledger.toffoli_estimate = toffoli_estimate(&ledger, &ledger.cost);
    ledger.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let v = table.vectors[current].clone().expect("chosen candidate decoded");
    info!("qsvp n={n} norm^2={} queries={}", v.norm_sq(), ledger.od_queries);
    let result = SvpResult {
        norm_sq: v.norm_sq(),
        vector: finish_vector(b, v),
        coset: CosetIndex::from_rank(current, n, 3),
        stats: table.stats(),
        bddp_queries: table.len() as u64,
        ops_per_query: table.ops_per_query,
        preprocess_ms,
        search_ms: search.elapsed().as_secs_f64() * 1e3,
    };
    Ok(QsvpOutput {
        result,
        ledger,
        thresholds,
        qenum_calls: timer,
    })
}

/// `queries * (2 cost(U_BDDP) + cost(Filter))`.
pub fn toffoli_estimate(ledger: &QueryLedger, cost: &CostModel) -> u64 {
    ledger.od_queries * (2 * cost.ubddp_ops + cost.filter_toffoli)
}
