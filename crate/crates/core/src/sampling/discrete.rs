use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::linalg::{dot, norm_sq};
use crate::lattice::{dual_for_sampling, gram_schmidt, gram_schmidt_real, Basis, GsoData, LatticeVector};
use crate::seed::{rng_for, Stream};

/// The randomized-rounding sampler is only used for `s >= VALIDITY_FACTOR * max ||b*_i||`.
pub const VALIDITY_FACTOR: f64 = 1.2;

/// Tail cut for the one-dimensional sampler, in units of `s`.
const TAIL_CUT: f64 = 12.0;

/// Windows with at most this many integers are sampled by inverse CDF.
const DIRECT_WINDOW: i64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct GaussianParam(f64);

impl GaussianParam {
    pub fn new(s: f64) -> Result<Self> {
        if s.is_finite() && s > 0.0 {
            Ok(GaussianParam(s))
        } else {
            Err(Error::InvalidParameter(format!("Gaussian parameter s = {s} must be finite and > 0")))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for GaussianParam {
    type Error = Error;
    fn try_from(s: f64) -> Result<Self> {
        GaussianParam::new(s)
    }
}

impl From<GaussianParam> for f64 {
    fn from(s: GaussianParam) -> f64 {
        s.0
    }
}

/// `rho_s(x) = exp(-pi ||x||^2 / s^2)`.
pub fn rho(x: &[f64], s: GaussianParam) -> f64 {
    (-std::f64::consts::PI * norm_sq(x) / (s.0 * s.0)).exp()
}

/// Integer `z` with probability proportional to `rho_s(z - center)`, restricted
/// to `[center - 12 s, center + 12 s]`.
pub fn sample_dg_1d<R: Rng + ?Sized>(center: f64, s: GaussianParam, rng: &mut R) -> i64 {
    let s = s.0;
    let lo = ((center - TAIL_CUT * s).ceil() as i64).min(center.floor() as i64);
    let hi = ((center + TAIL_CUT * s).floor() as i64).max(center.ceil() as i64);
    let log_weight = |z: i64| -std::f64::consts::PI * ((z as f64 - center) / s).powi(2);
    if hi - lo < DIRECT_WINDOW {
        // Exact inverse CDF, weights shifted by the largest one to avoid underflow.
        let top = (lo..=hi).map(log_weight).fold(f64::NEG_INFINITY, f64::max);
        let weights: Vec<f64> = (lo..=hi).map(|z| (log_weight(z) - top).exp()).collect();
        let total: f64 = weights.iter().sum();
        let mut u = rng.gen::<f64>() * total;
        for (z, w) in (lo..=hi).zip(&weights) {
            if u < *w {
                return z;
            }
            u -= w;
        }
        return hi;
    }
    loop {
        let z = rng.gen_range(lo..=hi);
        if rng.gen::<f64>() < log_weight(z).exp() {
            return z;
        }
    }
}

/// Sequential randomized rounding along the Gram-Schmidt directions of a real
/// basis. Output coefficients are integers, so samples are exact lattice points.
#[derive(Debug, Clone)]
pub struct GaussianSampler {
    vectors: Vec<Vec<f64>>,
    gso: GsoData,
    s: GaussianParam,
}

impl GaussianSampler {
    pub fn new(vectors: Vec<Vec<f64>>, gso: GsoData, s: GaussianParam) -> Result<Self> {
        let min = Self::threshold(&gso);
        if s.get() < min {
            return Err(Error::SamplerThreshold { s: s.get(), min });
        }
        Ok(GaussianSampler { vectors, gso, s })
    }

    pub fn threshold(gso: &GsoData) -> f64 {
        VALIDITY_FACTOR * gso.max_bstar_norm()
    }

    /// One sample from (approximately) `D_{L,s}`: integer coefficients and coordinates.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> (Vec<i64>, Vec<f64>) {
        let n = self.vectors.len();
        let mut t = vec![0.0; n];
        let mut z = vec![0i64; n];
        for i in (0..n).rev() {
            let c = dot(&t, &self.gso.bstar[i]) / self.gso.bstar_sq[i];
            let si = GaussianParam(self.s.0 / self.gso.bstar_sq[i].sqrt());
            z[i] = sample_dg_1d(c, si, rng);
            if z[i] != 0 {
                for (a, b) in t.iter_mut().zip(&self.vectors[i]) {
                    *a -= z[i] as f64 * b;
                }
            }
        }
        let v = t.into_iter().map(|x| -x).collect();
        (z, v)
    }
}

pub fn sample_lattice_gaussian<R: Rng + ?Sized>(
    b: &Basis,
    gso: &GsoData,
    s: GaussianParam,
    rng: &mut R,
) -> Result<LatticeVector> {
    let sampler = GaussianSampler::new(b.to_real(), gso.clone(), s)?;
    let (z, _) = sampler.sample(rng);
    Ok(b.point(z))
}

/// One dual-lattice sample: coordinates `w` and the exact pairing `B^T w`,
/// i.e. its integer coefficients over the dual basis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualSample {
    pub coords: Vec<f64>,
    pub pairing: Vec<i64>,
}

/// Samples `W = (w_1..w_N)` from the dual of `basis` with parameter `s`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualSampleSet {
    pub samples: Vec<DualSample>,
    pub s: GaussianParam,
    pub basis: Basis,
}

impl DualSampleSet {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn n(&self) -> usize {
        self.basis.n()
    }

    /// Every `w` pairs integrally with every basis vector (tolerance `1e-6`)
    /// and matches its recorded pairing.
    pub fn all_in_dual(&self) -> bool {
        let b = self.basis.to_real();
        self.samples.iter().all(|w| {
            b.iter()
                .zip(&w.pairing)
                .all(|(bi, &k)| (dot(bi, &w.coords) - k as f64).abs() < 1e-6)
        })
    }

    /// The same samples viewed as advice for `pL`: `(pL)^* = L^*/p`, parameter `s/p`.
    pub fn scaled(&self, p: i64) -> DualSampleSet {
        let inv = 1.0 / p as f64;
        DualSampleSet {
            samples: self
                .samples
                .iter()
                .map(|w| DualSample {
                    coords: w.coords.iter().map(|x| x * inv).collect(),
                    pairing: w.pairing.clone(),
                })
                .collect(),
            s: GaussianParam(self.s.0 * inv),
            basis: self.basis.scaled(p),
        }
    }
}

/// Minimum `s` accepted by [`sample_dual_set`] for this basis.
pub fn dual_sampler_threshold(b: &Basis) -> Result<f64> {
    let dual = dual_for_sampling(b)?;
    Ok(GaussianSampler::threshold(&gram_schmidt_real(&dual.vectors)?))
}

/// `N` i.i.d. samples over `L^*`, deterministic in `seed`.
pub fn sample_dual_set(b: &Basis, s: GaussianParam, count: usize, seed: u64) -> Result<DualSampleSet> {
    if count == 0 {
        return Err(Error::InvalidParameter("dual sample set must be nonempty".into()));
    }
    // primal GSO is only needed to fail early on singular input
    gram_schmidt(b)?;
    let dual = dual_for_sampling(b)?;
    let gso = gram_schmidt_real(&dual.vectors)?;
    let sampler = GaussianSampler::new(dual.vectors, gso, s)?;
    let mut rng = rng_for(seed, Stream::Sample);
    let n = b.n();
    let samples = (0..count)
        .map(|_| {
            let (z, coords) = sampler.sample(&mut rng);
            // sampling order is the reversed dual, so B^T w = reverse(z)
            let pairing = (0..n).map(|i| z[n - 1 - i]).collect();
            DualSample { coords, pairing }
        })
        .collect();
    Ok(DualSampleSet {
        samples,
        s,
        basis: b.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{gen_lattice, lll_reduce, LatticeKind};
    use crate::oracle::tv_distance;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashMap;

    fn param(s: f64) -> GaussianParam {
        GaussianParam::new(s).unwrap()
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(&[0.0, 0.0], param(3.0)), 1.0);
        assert!((rho(&[1.0, 0.0], param(1.0)) - 0.043_213_918_263_772_25).abs() < 1e-15);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let s = rng.gen_range(0.1..10.0);
            let x: Vec<f64> = (0..3).map(|_| rng.gen_range(-5.0..5.0)).collect();
            let scaled: Vec<f64> = x.iter().map(|v| v / s).collect();
            let (a, b) = (rho(&x, param(s)), rho(&scaled, param(1.0)));
            assert!((a - b).abs() <= 1e-12 * a.max(1e-300));
            if norm_sq(&x) > 0.0 {
                assert!(a < 1.0);
            }
        }
        assert!(GaussianParam::new(0.0).is_err());
        assert!(GaussianParam::new(f64::NAN).is_err());
    }

    #[test]
    fn narrow_1d_is_point_mass() {
        // rho_{0.05}(1) = exp(-400 pi): mass off zero is far below 1e-4
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let zeros = (0..10_000).filter(|_| sample_dg_1d(0.0, param(0.05), &mut rng) == 0).count();
        assert!(zeros as f64 / 1e4 > 0.9999);
    }

    #[test]
    fn half_center_is_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let trials = 20_000;
        let mut c0 = 0;
        let mut c1 = 0;
        for _ in 0..trials {
            match sample_dg_1d(0.5, param(1.0), &mut rng) {
                0 => c0 += 1,
                1 => c1 += 1,
                _ => {}
            }
        }
        // freq(0) - freq(1) has sd <= sqrt(2 p / trials)
        let p = (c0 + c1) as f64 / 2.0 / trials as f64;
        let sd = (2.0 * p / trials as f64).sqrt();
        assert!(((c0 - c1) as f64 / trials as f64).abs() < 3.0 * sd);
    }

    #[test]
    fn mean_near_center() {
        // exact expectation by series summation over the 12 s window
        let (c, s) = (3.0, 1.0);
        let (mut m0, mut m1, mut m2) = (0.0, 0.0, 0.0);
        for z in -20i64..=26 {
            let w = (-std::f64::consts::PI * (z as f64 - c).powi(2) / (s * s)).exp();
            m0 += w;
            m1 += w * z as f64;
            m2 += w * (z * z) as f64;
        }
        let mean = m1 / m0;
        let var = m2 / m0 - mean * mean;
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let trials = 10_000;
        let emp: f64 = (0..trials).map(|_| sample_dg_1d(c, param(s), &mut rng) as f64).sum::<f64>() / trials as f64;
        assert!((emp - mean).abs() < 3.0 * (var / trials as f64).sqrt());
        assert!((mean - 3.0).abs() < 1e-12);
    }

    fn exact_z2(s: f64, half: i64) -> HashMap<(i64, i64), f64> {
        let mut m = HashMap::new();
        let mut total = 0.0;
        for a in -half..=half {
            for b in -half..=half {
                let w = rho(&[a as f64, b as f64], param(s));
                total += w;
                m.insert((a, b), w);
            }
        }
        m.values_mut().for_each(|w| *w /= total);
        m
    }

    #[test]
    fn z2_tv_distance() {
        let b = Basis::identity(2);
        let g = gram_schmidt(&b).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut counts = HashMap::new();
        for _ in 0..100_000 {
            let v = sample_lattice_gaussian(&b, &g, param(2.0), &mut rng).unwrap();
            *counts.entry((v.coords[0], v.coords[1])).or_insert(0u64) += 1;
        }
        assert!(tv_distance(&counts, &exact_z2(2.0, 10)) < 0.02);
    }

    #[test]
    fn scaled_lattice_matches_unit() {
        let b = Basis::scaled_identity(2, 7);
        let g = gram_schmidt(&b).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let mut counts = HashMap::new();
        for _ in 0..50_000 {
            let v = sample_lattice_gaussian(&b, &g, param(14.0), &mut rng).unwrap();
            assert!(v.coords.iter().all(|x| x % 7 == 0));
            *counts.entry((v.coords[0] / 7, v.coords[1] / 7)).or_insert(0u64) += 1;
        }
        assert!(tv_distance(&counts, &exact_z2(2.0, 10)) < 0.03);
    }

    #[test]
    fn threshold_enforced_and_membership() {
        let b = lll_reduce(&gen_lattice(LatticeKind::Uniform { bits: 8 }, 4, 7), 0.99).unwrap();
        let g = gram_schmidt(&b).unwrap();
        let min = GaussianSampler::threshold(&g);
        let err = sample_lattice_gaussian(&b, &g, param(min * 0.9), &mut ChaCha8Rng::seed_from_u64(0));
        assert!(matches!(err, Err(Error::SamplerThreshold { .. })));
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..500 {
            let v = sample_lattice_gaussian(&b, &g, param(min), &mut rng).unwrap();
            assert!(v.is_member_of(&b));
            assert!(b.contains(&v.coords));
        }
    }

    #[test]
    fn dual_set_contract() {
        let b = Basis::identity(2);
        assert!(sample_dual_set(&b, param(2.0), 0, 1).is_err());
        let w1 = sample_dual_set(&b, param(2.0), 200, 1).unwrap();
        assert_eq!(w1, sample_dual_set(&b, param(2.0), 200, 1).unwrap());
        assert!(w1.all_in_dual());

        let r = lll_reduce(&gen_lattice(LatticeKind::Uniform { bits: 8 }, 4, 2), 0.99).unwrap();
        let s = dual_sampler_threshold(&r).unwrap();
        let w = sample_dual_set(&r, param(s), 300, 3).unwrap();
        assert!(w.all_in_dual());
        assert!(w.scaled(3).all_in_dual());
        assert!(matches!(sample_dual_set(&r, param(s * 0.5), 10, 3), Err(Error::SamplerThreshold { .. })));
    }

    #[test]
    fn z2_dual_tv_distance() {
        let w = sample_dual_set(&Basis::identity(2), param(2.0), 100_000, 11).unwrap();
        let mut counts = HashMap::new();
        for x in &w.samples {
            *counts.entry((x.pairing[0], x.pairing[1])).or_insert(0u64) += 1;
        }
        assert!(tv_distance(&counts, &exact_z2(2.0, 10)) < 0.02);
    }
}
