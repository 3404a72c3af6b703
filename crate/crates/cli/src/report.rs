use serde::Serialize;
use sha2::{Digest, Sha256};
use svp_core::bdd::BddConfig;
use svp_core::enumeration::CosetStats;
use svp_core::lattice::{io, Basis, LatticeVector};
use svp_core::quantum::QueryLedger;

/// SHA-256 of the canonical text form.
pub fn fingerprint(b: &Basis) -> String {
    hex::encode(Sha256::digest(io::to_text(b).as_bytes()))
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Timings {
    pub reduce_ms: f64,
    pub preprocess_ms: f64,
    pub solve_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub samples: usize,
    pub ascent_iters: usize,
    pub epsilon: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<u32>,
}

impl ConfigEcho {
    pub fn new(cfg: &BddConfig, with_kappa: bool, kappa: u32) -> Self {
        ConfigEcho {
            samples: cfg.samples,
            ascent_iters: cfg.ascent_iters,
            epsilon: cfg.epsilon,
            kappa: with_kappa.then_some(kappa),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunResult {
    pub schema: u32,
    pub command: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    pub fingerprint: String,
    pub n: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config: Option<ConfigEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vector: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub norm_sq: Option<i128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<CosetStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub qenum_calls: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ledger: Option<QueryLedger>,
    pub timings: Timings,
}

impl RunResult {
    pub fn new(command: &str, b: &Basis, seed: u64) -> Self {
        RunResult {
            schema: 1,
            command: command.into(),
            status: "ok".into(),
            mode: None,
            fingerprint: fingerprint(b),
            n: b.n(),
            seed,
            config: None,
            vector: None,
            coefficients: None,
            norm_sq: None,
            target: None,
            distance: None,
            message: None,
            stats: None,
            qenum_calls: None,
            ledger: None,
            timings: Timings::default(),
        }
    }

    pub fn set_vector(&mut self, v: LatticeVector) {
        self.norm_sq = Some(v.norm_sq());
        self.coefficients = v.coeffs;
        self.vector = Some(v.coords);
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            return serde_json::to_string_pretty(self).expect("result is serializable") + "\n";
        }
        let mut out = String::new();
        let mut row = |k: &str, v: String| out.push_str(&format!("{k:<14} {v}\n"));
        row("command", self.command.clone());
        if let Some(m) = &self.mode {
            row("mode", m.clone());
        }
        row("status", self.status.clone());
        row("n", self.n.to_string());
        row("fingerprint", self.fingerprint.clone());
        row("seed", self.seed.to_string());
        if let Some(v) = &self.vector {
            row("vector", format!("{v:?}"));
        }
        if let Some(q) = self.norm_sq {
            row("norm_sq", q.to_string());
            row("norm", format!("{:.6}", (q as f64).sqrt()));
        }
        if let Some(d) = self.distance {
            row("distance", format!("{d:.6}"));
        }
        if let Some(m) = &self.message {
            row("message", m.clone());
        }
        if let Some(l) = &self.ledger {
            row("od_queries", l.od_queries.to_string());
            row("ubddp_calls", l.ubddp_calls.to_string());
            row("filter_calls", l.filter_calls.to_string());
            row("toffoli_est", l.toffoli_estimate.to_string());
        }
        row(
            "time_ms",
            format!(
                "reduce {:.1}, preprocess {:.1}, solve {:.1}",
                self.timings.reduce_ms, self.timings.preprocess_ms, self.timings.solve_ms
            ),
        );
        out
    }
}
