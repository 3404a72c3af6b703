//! Exact brute-force oracles and statistics helpers used as ground truth.

use std::collections::{HashMap, HashSet};
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::enumerate::{for_each_in_ball, Visit};
use crate::lattice::linalg::norm_sq;
use crate::lattice::{dual_basis, gram_schmidt, lll_reduce_with_transform, Babai, Basis, LatticeVector, DEFAULT_DELTA};

pub const SVP_MAX_DIM: usize = 10;
pub const CVP_MAX_DIM: usize = 10;
pub const BALL_MAX_DIM: usize = 8;

fn guard(n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::DimensionGuard { n, max })
    } else {
        Ok(())
    }
}

pub fn brute_force_svp(b: &Basis) -> Result<LatticeVector> {
    brute_force_svp_guarded(b, SVP_MAX_DIM)
}

/// Exact shortest nonzero vector. Ties go to the lexicographically smallest
/// coordinate vector, which makes the answer independent of the basis.
pub fn brute_force_svp_guarded(b: &Basis, max_dim: usize) -> Result<LatticeVector> {
    guard(b.n(), max_dim)?;
    let red = lll_reduce_with_transform(b, DEFAULT_DELTA)?;
    let gso = gram_schmidt(&red.basis)?;
    let (i0, sq0) = red.basis.shortest_vector_index();
    let mut best_x: Vec<i64> = (0..b.n()).map(|j| i64::from(j == i0)).collect();
    let mut best_v = red.basis.vector(i0).to_vec();
    let mut best_sq = sq0;
    let origin = vec![0.0; b.n()];
    for_each_in_ball(&gso, &origin, sq0 as f64, |x, _| {
        if x.iter().all(|&c| c == 0) {
            return Visit::Continue;
        }
        let v = red.basis.combine(x);
        let sq = crate::lattice::LatticeVector { coords: v.clone(), coeffs: None }.norm_sq();
        if sq < best_sq || (sq == best_sq && v < best_v) {
            best_sq = sq;
            best_v = v;
            best_x = x.to_vec();
            return Visit::Shrink(sq as f64);
        }
        Visit::Continue
    });
    Ok(LatticeVector {
        coords: best_v,
        coeffs: Some(red.to_input_coeffs(&best_x)),
    })
}

pub fn lambda1(b: &Basis) -> Result<f64> {
    brute_force_svp(b).map(|v| v.norm())
}

pub fn brute_force_cvp(b: &Basis, t: &[f64]) -> Result<LatticeVector> {
    brute_force_cvp_guarded(b, t, CVP_MAX_DIM)
}

/// Exact closest vector to `t` (distances in `f64`; ties within `1e-12`
/// relative go to the lexicographically smallest coordinates).
pub fn brute_force_cvp_guarded(b: &Basis, t: &[f64], max_dim: usize) -> Result<LatticeVector> {
    guard(b.n(), max_dim)?;
    if t.len() != b.n() {
        return Err(Error::Shape(format!("target has length {}, expected {}", t.len(), b.n())));
    }
    let red = lll_reduce_with_transform(b, DEFAULT_DELTA)?;
    let gso = gram_schmidt(&red.basis)?;
    let start = Babai::new(&red.basis).round(t);
    let dist = |v: &[i64]| -> f64 { v.iter().zip(t).map(|(&a, b)| (a as f64 - b).powi(2)).sum() };
    let mut best_d = dist(&start.coords);
    let mut best_v = start.coords.clone();
    let mut best_x = start.coeffs.clone().expect("babai carries coefficients");
    for_each_in_ball(&gso, t, best_d, |x, _| {
        let v = red.basis.combine(x);
        let d = dist(&v);
        let tol = 1e-12 * best_d.max(1.0);
        if d < best_d - tol || ((d - best_d).abs() <= tol && v < best_v) {
            best_d = d.min(best_d);
            best_v = v;
            best_x = x.to_vec();
            return Visit::Shrink(best_d);
        }
        Visit::Continue
    });
    Ok(LatticeVector {
        coords: best_v,
        coeffs: Some(red.to_input_coeffs(&best_x)),
    })
}

/// All lattice points within a closed ball.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BallEnumeration {
    pub center: Vec<f64>,
    pub radius: f64,
    pub points: Vec<LatticeVector>,
    /// Inclusive box on each input-basis coefficient implied by the radius
    /// (`|x_i - <c, d_i>| <= r ||d_i||`); every listed point lies inside it.
    pub coefficient_bounds: Vec<(i64, i64)>,
}

impl BallEnumeration {
    pub fn contains(&self, v: &[i64]) -> bool {
        self.points.iter().any(|p| p.coords == v)
    }
}

pub fn ball_points(b: &Basis, center: &[f64], radius: f64) -> Result<BallEnumeration> {
    ball_points_guarded(b, center, radius, BALL_MAX_DIM)
}

pub fn ball_points_guarded(b: &Basis, center: &[f64], radius: f64, max_dim: usize) -> Result<BallEnumeration> {
    guard(b.n(), max_dim)?;
    if !radius.is_finite() || radius < 0.0 {
        return Err(Error::InvalidParameter(format!("radius {radius} must be finite and >= 0")));
    }
    if center.len() != b.n() {
        return Err(Error::Shape(format!("center has length {}, expected {}", center.len(), b.n())));
    }
    let red = lll_reduce_with_transform(b, DEFAULT_DELTA)?;
    let gso = gram_schmidt(&red.basis)?;
    let limit = radius + 1e-9;
    let mut seen = HashSet::new();
    let mut points = Vec::new();
    for_each_in_ball(&gso, center, limit * limit, |x, _| {
        let v = red.basis.combine(x);
        let diff: Vec<f64> = v.iter().zip(center).map(|(&a, c)| a as f64 - c).collect();
        if norm_sq(&diff).sqrt() <= limit && seen.insert(v.clone()) {
            points.push(LatticeVector {
                coords: v,
                coeffs: Some(red.to_input_coeffs(x)),
            });
        }
        Visit::Continue
    });
    points.sort_by(|a, b| a.coords.cmp(&b.coords));
    let dual = dual_basis(b)?;
    let coefficient_bounds = dual
        .vectors
        .iter()
        .map(|d| {
            let mid = crate::lattice::linalg::dot(center, d);
            let r = radius * norm_sq(d).sqrt();
            ((mid - r - 1e-9).ceil() as i64, (mid + r + 1e-9).floor() as i64)
        })
        .collect();
    Ok(BallEnumeration {
        center: center.to_vec(),
        radius,
        points,
        coefficient_bounds,
    })
}

/// Total variation distance `1/2 sum |p_hat - p|` over the union of supports.
pub fn tv_distance<K: Eq + Hash>(counts: &HashMap<K, u64>, exact: &HashMap<K, f64>) -> f64 {
    let total: u64 = counts.values().sum();
    let total = total.max(1) as f64;
    let mut sum = 0.0;
    for (k, p) in exact {
        let phat = counts.get(k).copied().unwrap_or(0) as f64 / total;
        sum += (phat - p).abs();
    }
    for (k, &c) in counts {
        if !exact.contains_key(k) {
            sum += c as f64 / total;
        }
    }
    0.5 * sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{gen_lattice, lll_reduce, LatticeKind};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn svp_examples() {
        let b = Basis::scaled_identity(3, 7);
        assert_eq!(brute_force_svp(&b).unwrap().norm_sq(), 49);
        let b = Basis::new(vec![vec![100, 1], vec![101, 1]]).unwrap();
        let v = brute_force_svp(&b).unwrap();
        assert_eq!(v.norm_sq(), 1);
        assert!(v.is_member_of(&b));
    }

    #[test]
    fn svp_result_is_minimal_over_ball() {
        for seed in 0..5 {
            let b = gen_lattice(LatticeKind::Uniform { bits: 6 }, 6, seed);
            let v = brute_force_svp(&b).unwrap();
            assert!(v.is_member_of(&b));
            let ball = ball_points_guarded(&b, &[0.0; 6], v.norm() * 1.3, 8).unwrap();
            for p in ball.points.iter().filter(|p| !p.is_zero()) {
                assert!(p.norm_sq() >= v.norm_sq());
            }
        }
    }

    #[test]
    fn svp_invariant_under_lll() {
        for seed in 0..10 {
            let b = gen_lattice(LatticeKind::Knapsack { bits: 12 }, 5, seed);
            let r = lll_reduce(&b, 0.99).unwrap();
            assert_eq!(brute_force_svp(&b).unwrap().coords, brute_force_svp(&r).unwrap().coords);
        }
    }

    #[test]
    fn guard_refuses() {
        let b = Basis::identity(11);
        assert_eq!(brute_force_svp(&b), Err(Error::DimensionGuard { n: 11, max: 10 }));
        assert!(matches!(ball_points(&Basis::identity(9), &[0.0; 9], 1.0), Err(Error::DimensionGuard { .. })));
    }

    #[test]
    fn cvp_examples() {
        let id = Basis::identity(2);
        assert_eq!(brute_force_cvp(&id, &[0.2, 0.7]).unwrap().coords, vec![0, 1]);
        let b = gen_lattice(LatticeKind::Uniform { bits: 8 }, 4, 3);
        let v = b.point(vec![1, -2, 0, 5]);
        assert_eq!(brute_force_cvp(&b, &v.to_real()).unwrap().coords, v.coords);
    }

    #[test]
    fn cvp_beats_every_nearby_point() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for trial in 0..100 {
            let n = 2 + trial % 4;
            let b = gen_lattice(LatticeKind::Uniform { bits: 6 }, n, trial as u64);
            let t: Vec<f64> = (0..n).map(|_| rng.gen_range(-40.0..40.0)).collect();
            let cv = brute_force_cvp(&b, &t).unwrap();
            let d = dist(&cv.coords, &t);
            let ball = ball_points(&b, &t, d + 0.1).unwrap();
            assert!(ball.contains(&cv.coords));
            for p in &ball.points {
                assert!(d <= dist(&p.coords, &t) + 1e-9);
            }
        }
    }

    #[test]
    fn cvp_shift_equivariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for trial in 0..30 {
            let b = gen_lattice(LatticeKind::Uniform { bits: 7 }, 4, trial);
            let t: Vec<f64> = (0..4).map(|_| rng.gen_range(-30.0..30.0)).collect();
            let x = b.point((0..4).map(|_| rng.gen_range(-5..=5)).collect());
            let shifted: Vec<f64> = t.iter().zip(&x.coords).map(|(a, &c)| a + c as f64).collect();
            let base = brute_force_cvp(&b, &t).unwrap();
            let moved = brute_force_cvp(&b, &shifted).unwrap();
            let expect: Vec<i64> = base.coords.iter().zip(&x.coords).map(|(a, c)| a + c).collect();
            assert_eq!(moved.coords, expect);
        }
    }

    fn dist(v: &[i64], t: &[f64]) -> f64 {
        v.iter().zip(t).map(|(&a, b)| (a as f64 - b).powi(2)).sum::<f64>().sqrt()
    }

    #[test]
    fn ball_examples() {
        let id = Basis::identity(2);
        assert_eq!(ball_points(&id, &[0.0, 0.0], 1.0).unwrap().points.len(), 5);
        assert_eq!(ball_points(&id, &[0.0, 0.0], 1.173).unwrap().points.len(), 5);
        let b = Basis::scaled_identity(3, 7);
        let only = ball_points(&b, &[0.0; 3], 6.9).unwrap();
        assert_eq!(only.points.len(), 1);
        assert!(only.points[0].is_zero());
    }

    #[test]
    fn ball_monotone_and_boxed() {
        let b = gen_lattice(LatticeKind::Uniform { bits: 5 }, 4, 21);
        let c = [1.5, -2.0, 0.25, 3.0];
        let small = ball_points(&b, &c, 12.0).unwrap();
        let large = ball_points(&b, &c, 20.0).unwrap();
        assert!(small.points.iter().all(|p| large.contains(&p.coords)));
        for p in &large.points {
            let x = p.coeffs.as_ref().unwrap();
            for (xi, (lo, hi)) in x.iter().zip(&large.coefficient_bounds) {
                assert!(lo <= xi && xi <= hi);
            }
        }
    }

    #[test]
    fn tv_examples() {
        let counts: HashMap<u8, u64> = [(0, 50), (1, 50)].into_iter().collect();
        let exact: HashMap<u8, f64> = [(0, 0.5), (1, 0.5)].into_iter().collect();
        assert_eq!(tv_distance(&counts, &exact), 0.0);
        let a: HashMap<u8, u64> = [(0, 10)].into_iter().collect();
        let b: HashMap<u8, f64> = [(1, 1.0)].into_iter().collect();
        assert_eq!(tv_distance(&a, &b), 1.0);
    }

    #[test]
    fn tv_fair_coin() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut counts: HashMap<bool, u64> = HashMap::new();
        for _ in 0..100_000 {
            *counts.entry(rng.gen::<bool>()).or_default() += 1;
        }
        let exact: HashMap<bool, f64> = [(false, 0.5), (true, 0.5)].into_iter().collect();
        // one-sided deviation of a 1e5 binomial exceeds 0.01 with probability < 1e-9
        assert!(tv_distance(&counts, &exact) <= 0.01);
    }
}
