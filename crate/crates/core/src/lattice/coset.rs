use serde::{Deserialize, Serialize};

use super::{Basis, LatticeVector};
use crate::error::{Error, Result};

/// Residue class `s in Z_p^n` of a coefficient vector modulo `p`.
///
/// Ranks order indices lexicographically with `digits[0]` most significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CosetIndex {
    pub digits: Vec<u32>,
    pub p: u32,
}

impl CosetIndex {
    pub fn new(digits: Vec<u32>, p: u32) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidParameter(format!("modulus p = {p} must be >= 2")));
        }
        if digits.iter().any(|&d| d >= p) {
            return Err(Error::InvalidParameter(format!("coset digits {digits:?} not in Z_{p}")));
        }
        Ok(CosetIndex { digits, p })
    }

    pub fn count(n: usize, p: u32) -> usize {
        (p as usize).pow(n as u32)
    }

    pub fn from_rank(mut rank: usize, n: usize, p: u32) -> Self {
        let mut digits = vec![0u32; n];
        for d in digits.iter_mut().rev() {
            *d = (rank % p as usize) as u32;
            rank /= p as usize;
        }
        CosetIndex { digits, p }
    }

    pub fn rank(&self) -> usize {
        self.digits
            .iter()
            .fold(0usize, |acc, &d| acc * self.p as usize + d as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    pub fn as_coeffs(&self) -> Vec<i64> {
        self.digits.iter().map(|&d| i64::from(d)).collect()
    }

    pub fn all(n: usize, p: u32) -> impl Iterator<Item = CosetIndex> {
        (0..Self::count(n, p)).map(move |r| Self::from_rank(r, n, p))
    }
}

/// Reduces `y` modulo `pL`: returns the coset index `s = x mod p` of its
/// coefficients and the representative `B s`, so that `y - B s` lies in `pL`.
pub fn mod_pl(y: &LatticeVector, b: &Basis, p: u32) -> Result<(CosetIndex, LatticeVector)> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("modulus p = {p} must be >= 2")));
    }
    let coeffs = match &y.coeffs {
        Some(c) if c.len() == b.n() && b.combine(c) == y.coords => c.clone(),
        Some(_) => return Err(Error::NotInLattice),
        None => b.coefficients_of(&y.coords).ok_or(Error::NotInLattice)?,
    };
    let digits: Vec<u32> = coeffs.iter().map(|c| c.rem_euclid(i64::from(p)) as u32).collect();
    let s = CosetIndex { digits, p };
    let rep = b.point(s.as_coeffs());
    Ok((s, rep))
}
