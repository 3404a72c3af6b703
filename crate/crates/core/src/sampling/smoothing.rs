//! Numerical smoothing parameter by brute-force Gaussian sums.
//!
//! `eta_eps(M)` is the `s` with `rho_{1/s}(M^* \ {0}) = eps`. The sum runs
//! over the points of `M^*` inside a radius `R`; the omitted tail is bounded
//! with Banaszczyk's inequality
//! `rho(X \ c sqrt(n) B) <= C(c)^n rho(X)`, `C(c) = c sqrt(2 pi e) exp(-pi c^2)`,
//! applied to `X = s M^*`, and `R` grows until that bound drops below
//! `eps * 1e-6` at the solution.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::enumerate::{for_each_in_ball, Visit};
use crate::lattice::{dual_for_sampling, gram_schmidt, gram_schmidt_real, lll_reduce, Basis, GsoData, DEFAULT_DELTA};

/// `beta^2 / e` with `beta = 2^0.401`.
pub const BETA_SQ_OVER_E: f64 = 0.641_403_867_994_989_6;

const TAIL_FRACTION: f64 = 1e-6;
const REL_TOL: f64 = 1e-7;
const MAX_POINTS: usize = 4_000_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SmoothingQuery {
    pub epsilon: f64,
    pub eta: f64,
    /// Truncation radius of the dual-point enumeration.
    pub radius: f64,
    pub points: usize,
    /// Certified upper bound on the omitted tail at `eta`.
    pub tail_bound: f64,
}

/// `eta_eps(L(B))`; sums over the dual lattice.
pub fn smoothing_parameter(b: &Basis, eps: f64) -> Result<SmoothingQuery> {
    let red = lll_reduce(b, DEFAULT_DELTA)?;
    let dual = dual_for_sampling(&red)?;
    let gso = gram_schmidt_real(&dual.vectors)?;
    let shortest = dual
        .vectors
        .iter()
        .map(|v| v.iter().map(|x| x * x).sum::<f64>())
        .fold(f64::INFINITY, f64::min)
        .sqrt();
    smoothing_over(&gso, shortest, eps)
}

/// `eta_eps(L(B)^*)`; sums over `L` itself, exactly the integer points.
pub fn dual_smoothing_parameter(b: &Basis, eps: f64) -> Result<SmoothingQuery> {
    let red = lll_reduce(b, DEFAULT_DELTA)?;
    let gso = gram_schmidt(&red)?;
    let shortest = (red.shortest_vector_index().1 as f64).sqrt();
    smoothing_over(&gso, shortest, eps)
}

fn banaszczyk(c: f64, n: usize) -> f64 {
    if c <= 1.0 / (2.0 * std::f64::consts::PI).sqrt() {
        return 1.0;
    }
    let base = c * (2.0 * std::f64::consts::PI * std::f64::consts::E).sqrt() * (-std::f64::consts::PI * c * c).exp();
    base.powi(n as i32).min(1.0)
}

/// Gaussian sum over the nonzero points of the lattice spanned by `gso`,
/// i.e. `g(s) = sum exp(-pi s^2 ||x||^2)`, from a list of squared norms.
fn mass(norms_sq: &[f64], s: f64) -> f64 {
    let k = -std::f64::consts::PI * s * s;
    norms_sq.iter().map(|&q| (k * q).exp()).sum()
}

fn smoothing_over(gso: &GsoData, shortest: f64, eps: f64) -> Result<SmoothingQuery> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidParameter(format!("epsilon = {eps} must lie in (0, 1)")));
    }
    let n = gso.n();
    let sqrt_n = (n as f64).sqrt();
    // g(s) >= 2 exp(-pi s^2 lambda1^2), so eta > sqrt(ln(1/eps)/pi) / lambda1.
    let s_lo = ((1.0 / eps).ln() / std::f64::consts::PI).sqrt() / shortest;
    let origin = vec![0.0; n];
    let mut radius = shortest.max(1.5 * sqrt_n / s_lo);
    loop {
        let mut norms = Vec::new();
        let mut overflow = false;
        for_each_in_ball(gso, &origin, radius * radius, |x, d| {
            if x.iter().any(|&c| c != 0) {
                norms.push(d);
                if norms.len() > MAX_POINTS {
                    overflow = true;
                    return Visit::Stop;
                }
            }
            Visit::Continue
        });
        if overflow {
            return Err(Error::Truncation { suggested_radius: radius });
        }
        // bracket [lo, hi] with g(lo) > eps >= g(hi)
        let mut lo = s_lo;
        let mut hi = s_lo;
        while mass(&norms, hi) > eps {
            lo = hi;
            hi *= 2.0;
        }
        while hi - lo > REL_TOL * hi {
            let mid = 0.5 * (lo + hi);
            if mass(&norms, mid) > eps {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let eta = hi;
        let c = radius * eta / sqrt_n;
        let cn = banaszczyk(c, n);
        let tail_bound = if cn < 1.0 { cn * (1.0 + eps) / (1.0 - cn) } else { f64::INFINITY };
        if tail_bound < eps * TAIL_FRACTION {
            return Ok(SmoothingQuery { epsilon: eps, eta, radius, points: norms.len(), tail_bound });
        }
        radius *= 1.25;
    }
}

/// `exp(-(beta^2/e) n)`, floored at `2^-60`.
pub fn epsilon_for_dim(n: usize) -> f64 {
    epsilon_at(n as f64)
}

fn epsilon_at(n: f64) -> f64 {
    (-BETA_SQ_OVER_E * n).exp().max((-60.0f64).exp2())
}
