use rand::Rng;
use serde::{Deserialize, Serialize};

/// A search over `n_states` items with `marked` of them marked, measured
/// after `iterations` Grover iterations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GroverRun {
    pub n_states: u64,
    pub marked: u64,
    pub iterations: u64,
    pub theta: f64,
    pub probability: f64,
}

impl GroverRun {
    pub fn new(n_states: u64, marked: u64, iterations: u64) -> Self {
        assert!(n_states > 0 && marked <= n_states, "need 0 <= M <= N, N > 0");
        let theta = (marked as f64 / n_states as f64).sqrt().asin();
        let probability = match marked {
            0 => 0.0,
            m if m == n_states => 1.0,
            _ => ((2 * iterations + 1) as f64 * theta).sin().powi(2).clamp(0.0, 1.0),
        };
        GroverRun {
            n_states,
            marked,
            iterations,
            theta,
            probability,
        }
    }
}

/// Gate cost of one query: arithmetic operations of `U_BDDP` and Toffolis of the filter.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CostModel {
    pub ubddp_ops: u64,
    pub filter_toffoli: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct QueryLedger {
    pub od_queries: u64,
    pub ubddp_calls: u64,
    pub filter_calls: u64,
    pub measurements: u64,
    pub cost: CostModel,
    pub toffoli_estimate: u64,
    pub wall_ms: f64,
    pub seed: u64,
}

impl QueryLedger {
    pub fn new(cost: CostModel, seed: u64) -> Self {
        QueryLedger {
            cost,
            seed,
            ..Default::default()
        }
    }

    /// `T` oracle queries, each one `U_BDDP`, `Filter`, `U_BDDP^dagger`.
    pub fn charge(&mut self, t: u64) {
        self.od_queries += t;
        self.ubddp_calls += 2 * t;
        self.filter_calls += t;
    }

    pub fn merge(&mut self, other: &QueryLedger) {
        self.od_queries += other.od_queries;
        self.ubddp_calls += other.ubddp_calls;
        self.filter_calls += other.filter_calls;
        self.measurements += other.measurements;
    }
}

/// Simulates one measurement after `T` iterations: `true` when the outcome is marked.
pub fn grover_measure_sim<R: Rng + ?Sized>(run: &GroverRun, rng: &mut R, ledger: &mut QueryLedger) -> bool {
    ledger.charge(run.iterations);
    ledger.measurements += 1;
    rng.gen_bool(run.probability)
}
