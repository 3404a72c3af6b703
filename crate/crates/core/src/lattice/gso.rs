use serde::{Deserialize, Serialize};

use super::linalg::{dot, norm_sq};
use super::Basis;
use crate::error::{Error, Result};

/// Gram-Schmidt data: `b_i = b*_i + sum_{j<i} mu[i][j] b*_j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GsoData {
    pub bstar: Vec<Vec<f64>>,
    pub mu: Vec<Vec<f64>>,
    pub bstar_sq: Vec<f64>,
}

impl GsoData {
    pub fn n(&self) -> usize {
        self.bstar.len()
    }

    pub fn max_bstar_norm(&self) -> f64 {
        self.bstar_sq.iter().cloned().fold(0.0, f64::max).sqrt()
    }

    pub fn min_bstar_norm(&self) -> f64 {
        self.bstar_sq.iter().cloned().fold(f64::INFINITY, f64::min).sqrt()
    }

    /// Rebuilds `b_i` from the orthogonal vectors and coefficients.
    pub fn reconstruct(&self) -> Vec<Vec<f64>> {
        (0..self.n())
            .map(|i| {
                let mut v = self.bstar[i].clone();
                for j in 0..i {
                    for (x, y) in v.iter_mut().zip(&self.bstar[j]) {
                        *x += self.mu[i][j] * y;
                    }
                }
                v
            })
            .collect()
    }

    /// Coordinates `gamma` of `t = sum_j gamma_j b*_j` (full rank).
    pub fn project(&self, t: &[f64]) -> Vec<f64> {
        self.bstar
            .iter()
            .zip(&self.bstar_sq)
            .map(|(b, sq)| dot(t, b) / sq)
            .collect()
    }
}

pub fn gram_schmidt(b: &Basis) -> Result<GsoData> {
    gram_schmidt_real(&b.to_real())
}

/// Gram-Schmidt over real vectors. A vector whose orthogonal part collapses
/// below `1e-10` of its own length is reported as rank deficient.
pub fn gram_schmidt_real(vectors: &[Vec<f64>]) -> Result<GsoData> {
    let n = vectors.len();
    let mut bstar: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut bstar_sq = Vec::with_capacity(n);
    let mut mu = vec![vec![0.0; n]; n];
    for (i, b) in vectors.iter().enumerate() {
        let mut v = b.clone();
        for j in 0..i {
            let m = dot(b, &bstar[j]) / bstar_sq[j];
            mu[i][j] = m;
            for (x, y) in v.iter_mut().zip(&bstar[j]) {
                *x -= m * y;
            }
        }
        let sq = norm_sq(&v);
        if sq.is_nan() || sq <= norm_sq(b) * 1e-20 {
            return Err(Error::RankDeficient { index: i });
        }
        bstar.push(v);
        bstar_sq.push(sq);
    }
    Ok(GsoData { bstar, mu, bstar_sq })
}
