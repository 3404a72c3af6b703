use std::f64::consts::PI;
use std::sync::OnceLock;

use log::debug;
use serde::{Deserialize, Serialize};

use super::config::BddConfig;
use super::periodic::DIVERGENCE_FLOOR;
use crate::error::{Error, Result};
use crate::lattice::linalg::{inverse_rows, mat_vec};
use crate::lattice::{dual_basis, is_lll_reduced, lll_reduce, round_half_up, Basis, DualBasis, LatticeVector, DEFAULT_DELTA};
use crate::sampling::{dual_sampler_threshold, dual_smoothing_parameter, sample_dual_set, DualSampleSet, GaussianParam};

/// The preprocessing output. Immutable once built and safe to share across
/// query threads.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BddpAdvice {
    pub config: BddConfig,
    /// Numerical `eta_eps(L^*)` before flooring by the sampler threshold.
    pub eta: f64,
    pub samples: DualSampleSet,
    #[serde(skip)]
    cache: OnceLock<Prepared>,
}

/// Query-side tables in coefficient space: `B^{-1}` and `B^{-1} w_i`.
#[derive(Debug, Clone)]
struct Prepared {
    inv_rows: Vec<Vec<f64>>,
    pairings: Vec<Vec<f64>>,
    dirs: Vec<Vec<f64>>,
}

impl PartialEq for BddpAdvice {
    fn eq(&self, other: &Self) -> bool {
        self.config == other.config && self.eta == other.eta && self.samples == other.samples
    }
}

impl BddpAdvice {
    pub fn new(config: BddConfig, eta: f64, samples: DualSampleSet) -> Self {
        BddpAdvice {
            config,
            eta,
            samples,
            cache: OnceLock::new(),
        }
    }

    /// The (LLL-reduced) basis the advice was built for.
    pub fn basis(&self) -> &Basis {
        &self.samples.basis
    }

    pub fn dual(&self) -> Result<DualBasis> {
        dual_basis(self.basis())
    }

    pub fn n(&self) -> usize {
        self.basis().n()
    }

    pub fn s(&self) -> f64 {
        self.samples.s.get()
    }

    /// Advice for `pL`, reusing the same samples divided by `p`.
    pub fn scaled(&self, p: i64) -> BddpAdvice {
        BddpAdvice::new(self.config.clone(), self.eta / p as f64, self.samples.scaled(p))
    }

    /// Arithmetic operations of one query: per ascent step and sample an
    /// `n`-term phase, a sine/cosine pair and an `n`-term accumulation; plus
    /// the coordinate transform and the final rounding.
    pub fn ops_per_query(&self) -> u64 {
        let n = self.n() as u64;
        self.config.ascent_iters as u64 * self.samples.len() as u64 * (3 * n + 2) + 2 * n * n
    }

    fn prepared(&self) -> &Prepared {
        self.cache.get_or_init(|| {
            let inv_rows = inverse_rows(&self.basis().to_real()).expect("advice basis is full rank");
            let pairings = self
                .samples
                .samples
                .iter()
                .map(|w| w.pairing.iter().map(|&k| k as f64).collect())
                .collect();
            let dirs = self.samples.samples.iter().map(|w| mat_vec(&inv_rows, &w.coords)).collect();
            Prepared {
                inv_rows,
                pairings,
                dirs,
            }
        })
    }
}

/// LLL-reduces `b` if needed, computes `s = max(eta_eps(L^*), threshold)` and
/// draws `cfg.samples` dual samples at `s`.
pub fn bddp_preprocess(b: &Basis, cfg: &BddConfig, seed: u64) -> Result<BddpAdvice> {
    cfg.validate()?;
    let reduced = if is_lll_reduced(b, DEFAULT_DELTA) {
        b.clone()
    } else {
        lll_reduce(b, DEFAULT_DELTA)?
    };
    let eta = dual_smoothing_parameter(&reduced, cfg.epsilon)?.eta;
    let floor = dual_sampler_threshold(&reduced)?;
    let s = eta.max(floor);
    debug!("preprocess n={} eta={eta:.6} floor={floor:.6} s={s:.6}", b.n());
    let samples = sample_dual_set(&reduced, GaussianParam::new(s)?, cfg.samples, seed)?;
    Ok(BddpAdvice::new(cfg.clone(), eta, samples))
}

/// Decodes `t`. Every ascent step is taken in coordinates over the advice
/// basis after splitting off the nearest integer vector, so adding a lattice
/// vector to `t` shifts the answer by exactly that vector.
pub fn bddp_query(advice: &BddpAdvice, t: &[f64]) -> Result<LatticeVector> {
    let n = advice.n();
    if t.len() != n {
        return Err(Error::Shape(format!("target has {} coordinates, lattice rank is {n}", t.len())));
    }
    let prep = advice.prepared();
    let u = mat_vec(&prep.inv_rows, t);
    let base: Vec<f64> = u.iter().map(|&x| round_half_up(x)).collect();
    let mut f: Vec<f64> = u.iter().zip(&base).map(|(x, r)| x - r).collect();
    let count = prep.dirs.len() as f64;
    let s = advice.s();
    let mut grad = vec![0.0; n];
    for _ in 0..advice.config.ascent_iters {
        let mut value = 0.0;
        grad.iter_mut().for_each(|g| *g = 0.0);
        for (k, dir) in prep.pairings.iter().zip(&prep.dirs) {
            let phase = 2.0 * PI * k.iter().zip(&f).map(|(a, b)| a * b).sum::<f64>();
            let (sin, cos) = phase.sin_cos();
            value += cos;
            for (g, d) in grad.iter_mut().zip(dir) {
                *g += sin * d;
            }
        }
        value /= count;
        if value.abs() < DIVERGENCE_FLOOR {
            return Err(Error::Divergence { value });
        }
        let step = -1.0 / (count * s * s * value);
        for (fi, g) in f.iter_mut().zip(&grad) {
            *fi += step * g;
        }
    }
    let coeffs = f
        .iter()
        .zip(&base)
        .map(|(x, r)| (round_half_up(*x) + r) as i64)
        .collect();
    Ok(advice.basis().point(coeffs))
}
