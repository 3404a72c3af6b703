use super::gso::{gram_schmidt_real, GsoData};
use super::rounding::round_half_up;
use super::Basis;
use crate::error::Result;

pub const DEFAULT_DELTA: f64 = 0.99;

#[derive(Debug, Clone)]
pub struct LllOutput {
    pub basis: Basis,
    /// Row `j` holds the coefficients of output vector `j` over the input basis.
    pub transform: Vec<Vec<i64>>,
    pub swaps: usize,
}

impl LllOutput {
    /// Maps coefficients over the reduced basis back to the input basis.
    pub fn to_input_coeffs(&self, x: &[i64]) -> Vec<i64> {
        let n = x.len();
        let mut out = vec![0i64; n];
        for (xj, row) in x.iter().zip(&self.transform) {
            for (o, u) in out.iter_mut().zip(row) {
                *o += xj * u;
            }
        }
        out
    }
}

pub fn lll_reduce(b: &Basis, delta: f64) -> Result<Basis> {
    lll_reduce_with_transform(b, delta).map(|o| o.basis)
}

/// Textbook LLL on the integer basis. Size reduction updates `mu` in place;
/// the Gram-Schmidt data is recomputed from the exact basis after each swap.
pub fn lll_reduce_with_transform(b: &Basis, delta: f64) -> Result<LllOutput> {
    assert!(delta > 0.25 && delta < 1.0, "delta must lie in (0.25, 1)");
    let n = b.n();
    let mut vecs: Vec<Vec<i64>> = b.vectors().to_vec();
    let mut transform: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut gso = gso_of(&vecs)?;
    let mut swaps = 0;
    let mut k = 1;
    while k < n {
        for j in (0..k).rev() {
            let q = round_half_up(gso.mu[k][j]);
            if q == 0.0 {
                continue;
            }
            let qi = q as i64;
            let (head, tail) = vecs.split_at_mut(k);
            for (x, y) in tail[0].iter_mut().zip(&head[j]) {
                *x -= qi * y;
            }
            let (head, tail) = transform.split_at_mut(k);
            for (x, y) in tail[0].iter_mut().zip(&head[j]) {
                *x -= qi * y;
            }
            for l in 0..j {
                gso.mu[k][l] -= q * gso.mu[j][l];
            }
            gso.mu[k][j] -= q;
        }
        let m = gso.mu[k][k - 1];
        if gso.bstar_sq[k] >= (delta - m * m) * gso.bstar_sq[k - 1] {
            k += 1;
        } else {
            vecs.swap(k, k - 1);
            transform.swap(k, k - 1);
            swaps += 1;
            gso = gso_of(&vecs)?;
            k = (k - 1).max(1);
        }
    }
    Ok(LllOutput {
        basis: Basis::new_unchecked(vecs),
        transform,
        swaps,
    })
}

fn gso_of(vecs: &[Vec<i64>]) -> Result<GsoData> {
    let real: Vec<Vec<f64>> = vecs
        .iter()
        .map(|v| v.iter().map(|&x| x as f64).collect())
        .collect();
    gram_schmidt_real(&real)
}

/// Size-reduced (`|mu| <= 1/2`) and Lovasz condition, with a small slack for
/// floating-point noise.
pub fn is_lll_reduced(b: &Basis, delta: f64) -> bool {
    let Ok(g) = gso_of(b.vectors()) else {
        return false;
    };
    let tol = 1e-9;
    for i in 1..b.n() {
        if (0..i).any(|j| g.mu[i][j].abs() > 0.5 + tol) {
            return false;
        }
        let m = g.mu[i][i - 1];
        if g.bstar_sq[i] < (delta - m * m) * g.bstar_sq[i - 1] * (1.0 - tol) {
            return false;
        }
    }
    true
}
