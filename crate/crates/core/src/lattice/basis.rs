use serde::{Deserialize, Serialize};

use super::exact;
use crate::error::{Error, Result};

/// A full-rank integer basis of a lattice in `Z^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct Basis {
    vectors: Vec<Vec<i64>>,
}

impl Basis {
    /// Builds a basis from its vectors `b_1..b_n`. The matrix must be square
    /// with nonzero determinant (checked exactly).
    pub fn new(vectors: Vec<Vec<i64>>) -> Result<Self> {
        let n = vectors.len();
        if n == 0 {
            return Err(Error::Shape("empty basis".into()));
        }
        if let Some((i, v)) = vectors.iter().enumerate().find(|(_, v)| v.len() != n) {
            return Err(Error::Shape(format!(
                "basis vector {} has length {}, expected {n}",
                i + 1,
                v.len()
            )));
        }
        let basis = Basis { vectors };
        if let Some(index) = exact::first_dependent_column(&basis.vectors) {
            return Err(Error::RankDeficient { index });
        }
        Ok(basis)
    }

    pub(crate) fn new_unchecked(vectors: Vec<Vec<i64>>) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == vectors.len()));
        Basis { vectors }
    }

    pub fn identity(n: usize) -> Self {
        Self::scaled_identity(n, 1)
    }

    pub fn scaled_identity(n: usize, scale: i64) -> Self {
        assert!(scale != 0, "scale must be nonzero");
        let vectors = (0..n)
            .map(|i| (0..n).map(|j| if i == j { scale } else { 0 }).collect())
            .collect();
        Basis { vectors }
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &[i64] {
        &self.vectors[i]
    }

    pub fn to_real(&self) -> Vec<Vec<f64>> {
        self.vectors
            .iter()
            .map(|v| v.iter().map(|&x| x as f64).collect())
            .collect()
    }

    /// `B x`.
    pub fn combine(&self, coeffs: &[i64]) -> Vec<i64> {
        assert_eq!(coeffs.len(), self.n());
        let mut out = vec![0i64; self.n()];
        for (c, b) in coeffs.iter().zip(&self.vectors) {
            if *c == 0 {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                *o += c * x;
            }
        }
        out
    }

    /// The lattice point `B x`, carrying `x`.
    pub fn point(&self, coeffs: Vec<i64>) -> LatticeVector {
        LatticeVector {
            coords: self.combine(&coeffs),
            coeffs: Some(coeffs),
        }
    }

    /// Basis of `pL`.
    pub fn scaled(&self, p: i64) -> Basis {
        assert!(p != 0);
        Basis {
            vectors: self
                .vectors
                .iter()
                .map(|v| v.iter().map(|x| x * p).collect())
                .collect(),
        }
    }

    pub fn norm_sq(&self, i: usize) -> i128 {
        norm_sq(&self.vectors[i])
    }

    /// Index and squared norm of the shortest basis vector (first on ties).
    pub fn shortest_vector_index(&self) -> (usize, i128) {
        (0..self.n())
            .map(|i| (i, self.norm_sq(i)))
            .min_by_key(|&(i, sq)| (sq, i))
            .expect("nonempty basis")
    }

    /// Exact integer coefficients of `v`, or `None` if `v` is not in the lattice.
    pub fn coefficients_of(&self, v: &[i64]) -> Option<Vec<i64>> {
        exact::integer_coefficients(&self.vectors, v)
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.coefficients_of(v).is_some()
    }

    pub fn determinant(&self) -> num::BigInt {
        exact::determinant(&self.vectors)
    }
}

impl TryFrom<Vec<Vec<i64>>> for Basis {
    type Error = Error;

    fn try_from(vectors: Vec<Vec<i64>>) -> Result<Self> {
        Basis::new(vectors)
    }
}

impl From<Basis> for Vec<Vec<i64>> {
    fn from(b: Basis) -> Self {
        b.vectors
    }
}

pub(crate) fn norm_sq(v: &[i64]) -> i128 {
    v.iter().map(|&x| (x as i128) * (x as i128)).sum()
}

/// A lattice point with integer coordinates, optionally carrying its
/// coefficient vector with respect to the basis that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeVector {
    pub coords: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<Vec<i64>>,
}

impl LatticeVector {
    pub fn zero(n: usize) -> Self {
        LatticeVector {
            coords: vec![0; n],
            coeffs: Some(vec![0; n]),
        }
    }

    pub fn norm_sq(&self) -> i128 {
        norm_sq(&self.coords)
    }

    pub fn norm(&self) -> f64 {
        (self.norm_sq() as f64).sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }

    pub fn to_real(&self) -> Vec<f64> {
        self.coords.iter().map(|&x| x as f64).collect()
    }

    /// Checks `coords = B coeffs` when coefficients are present, otherwise
    /// exact membership.
    pub fn is_member_of(&self, basis: &Basis) -> bool {
        match &self.coeffs {
            Some(c) => c.len() == basis.n() && basis.combine(c) == self.coords,
            None => basis.contains(&self.coords),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_singular_and_ragged() {
        assert!(matches!(
            Basis::new(vec![vec![1, 2], vec![2, 4]]),
            Err(Error::RankDeficient { .. })
        ));
        assert!(matches!(Basis::new(vec![vec![1, 2], vec![2]]), Err(Error::Shape(_))));
        assert!(matches!(Basis::new(vec![]), Err(Error::Shape(_))));
    }

    #[test]
    fn combine_and_membership() {
        let b = Basis::new(vec![vec![2, 0], vec![1, 1]]).unwrap();
        let p = b.point(vec![3, -1]);
        assert_eq!(p.coords, vec![5, -1]);
        assert!(p.is_member_of(&b));
        assert_eq!(b.coefficients_of(&[5, -1]), Some(vec![3, -1]));
        assert_eq!(b.coefficients_of(&[1, 0]), None);
        assert_eq!(b.scaled(3).vectors()[1], vec![3, 3]);
    }
}
