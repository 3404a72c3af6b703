//! Coset enumeration: one BDD query per residue class of `L / pL`.
//!
//! For `s in Z_p^n` the candidate is `B s - p * BDD((B s - t) / p)`. With an
//! exact decoder every lattice point within `p * alpha * lambda_1` of `t`
//! appears among the `p^n` candidates.

use std::time::Instant;

use log::{debug, info};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bdd::{bddp_preprocess, bddp_query, BddConfig, BddpAdvice};
use crate::error::{Error, Result};
use crate::lattice::{Basis, CosetIndex, LatticeVector};
use crate::oracle::{brute_force_cvp_guarded, CVP_MAX_DIM};

/// Any decoder that maps a target to a nearby point of one fixed lattice.
pub trait BddOracle: Sync {
    fn decode(&self, t: &[f64]) -> Result<LatticeVector>;
}

/// Exact closest-vector decoding by enumeration.
#[derive(Debug, Clone)]
pub struct ExactCvp {
    basis: Basis,
}

impl ExactCvp {
    pub fn new(basis: &Basis) -> Self {
        ExactCvp { basis: basis.clone() }
    }
}

impl BddOracle for ExactCvp {
    fn decode(&self, t: &[f64]) -> Result<LatticeVector> {
        brute_force_cvp_guarded(&self.basis, t, CVP_MAX_DIM)
    }
}

impl BddOracle for BddpAdvice {
    fn decode(&self, t: &[f64]) -> Result<LatticeVector> {
        bddp_query(self, t)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Entry {
    Candidate { vector: LatticeVector },
    Failed { reason: String },
}

impl Entry {
    pub fn candidate(&self) -> Option<&LatticeVector> {
        match self {
            Entry::Candidate { vector } => Some(vector),
            Entry::Failed { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnumOutput {
    pub p: u32,
    pub target: Vec<f64>,
    /// `p * alpha * lambda_1`, when the caller knows `lambda_1`.
    pub radius_claim: Option<f64>,
    /// One entry per coset, in rank order.
    pub entries: Vec<(CosetIndex, Entry)>,
}

impl EnumOutput {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn candidates(&self) -> impl Iterator<Item = &LatticeVector> {
        self.entries.iter().filter_map(|(_, e)| e.candidate())
    }

    pub fn failures(&self) -> usize {
        self.entries.iter().filter(|(_, e)| e.candidate().is_none()).count()
    }

    pub fn contains(&self, coords: &[i64]) -> bool {
        self.candidates().any(|v| v.coords == coords)
    }
}

/// `B s - p * bdd((B s - t) / p)`.
pub fn coset_candidate<O: BddOracle + ?Sized>(
    b: &Basis,
    t: &[f64],
    p: u32,
    s: &CosetIndex,
    oracle: &O,
) -> Result<LatticeVector> {
    let bs = b.combine(&s.as_coeffs());
    let inv = 1.0 / f64::from(p);
    let target: Vec<f64> = bs.iter().zip(t).map(|(&x, &y)| (x as f64 - y) * inv).collect();
    let v = oracle.decode(&target)?;
    let p = i64::from(p);
    let coords = bs.iter().zip(&v.coords).map(|(x, y)| x - p * y).collect();
    let coeffs = v
        .coeffs
        .filter(|c| c.len() == s.digits.len() && b.combine(c) == v.coords)
        .map(|c| s.as_coeffs().iter().zip(&c).map(|(x, y)| x - p * y).collect());
    Ok(LatticeVector { coords, coeffs })
}

/// All `p^n` candidates around `t`. Decode failures stay in the output.
pub fn enum_all<O: BddOracle + ?Sized>(b: &Basis, t: &[f64], p: u32, oracle: &O) -> Result<EnumOutput> {
    let n = b.n();
    if t.len() != n {
        return Err(Error::Shape(format!("target has {} coordinates, lattice rank is {n}", t.len())));
    }
    if p < 2 {
        return Err(Error::InvalidParameter(format!("modulus p = {p} must be >= 2")));
    }
    let entries = (0..CosetIndex::count(n, p))
        .into_par_iter()
        .map(|rank| {
            let s = CosetIndex::from_rank(rank, n, p);
            let entry = match coset_candidate(b, t, p, &s, oracle) {
                Ok(vector) => Entry::Candidate { vector },
                Err(e) => Entry::Failed { reason: e.to_string() },
            };
            (s, entry)
        })
        .collect();
    Ok(EnumOutput {
        p,
        target: t.to_vec(),
        radius_claim: None,
        entries,
    })
}

/// The candidate `-BDD(3L, B s) + B s` for coset `s`, computed as
/// `B s - 3 * bddp_query(advice, B s / 3)`.
pub fn svp_candidate(advice: &BddpAdvice, s: &CosetIndex) -> Result<LatticeVector> {
    let zero = vec![0.0; advice.n()];
    coset_candidate(advice.basis(), &zero, 3, s, advice)
}

/// Every coset's candidate over the advice basis, in rank order.
pub fn svp_candidates(advice: &BddpAdvice) -> Vec<Result<LatticeVector>> {
    let n = advice.n();
    (0..CosetIndex::count(n, 3))
        .into_par_iter()
        .map(|rank| svp_candidate(advice, &CosetIndex::from_rank(rank, n, 3)))
        .collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetStats {
    pub cosets: u64,
    pub decoded: u64,
    pub failed: u64,
    pub zero: u64,
}

impl CosetStats {
    fn merge(self, o: CosetStats) -> CosetStats {
        CosetStats {
            cosets: self.cosets + o.cosets,
            decoded: self.decoded + o.decoded,
            failed: self.failed + o.failed,
            zero: self.zero + o.zero,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SvpResult {
    /// Shortest vector found; `coeffs` are over the input basis.
    pub vector: LatticeVector,
    pub norm_sq: i128,
    pub coset: CosetIndex,
    pub stats: CosetStats,
    pub bddp_queries: u64,
    pub ops_per_query: u64,
    pub preprocess_ms: f64,
    pub search_ms: f64,
}

impl SvpResult {
    pub fn norm(&self) -> f64 {
        (self.norm_sq as f64).sqrt()
    }
}

pub(crate) fn finish_vector(input: &Basis, v: LatticeVector) -> LatticeVector {
    let coeffs = input.coefficients_of(&v.coords);
    LatticeVector { coords: v.coords, coeffs }
}

/// Classical search: decode all `3^n` cosets with one advice and keep the
/// shortest nonzero candidate. Ties go to the lowest coset rank.
pub fn enum_svp(b: &Basis, cfg: &BddConfig, seed: u64) -> Result<SvpResult> {
    let start = Instant::now();
    let advice = bddp_preprocess(b, cfg, seed)?;
    let preprocess_ms = start.elapsed().as_secs_f64() * 1e3;
    let n = b.n();
    let count = CosetIndex::count(n, 3);
    let search = Instant::now();
    type Best = Option<(i128, usize, LatticeVector)>;
    let pick = |a: Best, c: Best| match (a, c) {
        (Some(x), Some(y)) => Some(if (y.0, y.1) < (x.0, x.1) { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    };
    let (best, stats) = (0..count)
        .into_par_iter()
        .fold(
            || (None, CosetStats::default()),
            |(best, mut st): (Best, CosetStats), rank| {
                st.cosets += 1;
                match svp_candidate(&advice, &CosetIndex::from_rank(rank, n, 3)) {
                    Err(e) => {
                        debug!("coset {rank} failed: {e}");
                        st.failed += 1;
                        (best, st)
                    }
                    Ok(v) if v.is_zero() => {
                        st.decoded += 1;
                        st.zero += 1;
                        (best, st)
                    }
                    Ok(v) => {
                        st.decoded += 1;
                        (pick(best, Some((v.norm_sq(), rank, v))), st)
                    }
                }
            },
        )
        .reduce(|| (None, CosetStats::default()), |(a, s), (c, t)| (pick(a, c), s.merge(t)));
    let search_ms = search.elapsed().as_secs_f64() * 1e3;
    let Some((norm_sq, rank, v)) = best else {
        return Err(if stats.failed == stats.cosets { Error::AllCosetsFailed } else { Error::Degenerate });
    };
    info!("enum_svp n={n} norm^2={norm_sq} failed={} zero={}", stats.failed, stats.zero);
    Ok(SvpResult {
        vector: finish_vector(b, v),
        norm_sq,
        coset: CosetIndex::from_rank(rank, n, 3),
        stats,
        bddp_queries: count as u64,
        ops_per_query: advice.ops_per_query(),
        preprocess_ms,
        search_ms,
    })
}
