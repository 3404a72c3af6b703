use super::linalg::{inverse_rows, mat_vec};
use super::{Basis, LatticeVector};

/// Nearest integer, with exact halves going toward `+inf`.
pub fn round_half_up(x: f64) -> f64 {
    (x + 0.5).floor()
}

/// Babai rounding `B * Round(B^{-1} t)` with the inverse computed once.
#[derive(Debug, Clone)]
pub struct Babai {
    basis: Basis,
    inv_rows: Vec<Vec<f64>>,
}

impl Babai {
    pub fn new(basis: &Basis) -> Self {
        let inv_rows = inverse_rows(&basis.to_real()).expect("basis is full rank");
        Babai {
            basis: basis.clone(),
            inv_rows,
        }
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    /// `B^{-1} t`.
    pub fn coordinates(&self, t: &[f64]) -> Vec<f64> {
        mat_vec(&self.inv_rows, t)
    }

    pub fn round(&self, t: &[f64]) -> LatticeVector {
        let coeffs = self
            .coordinates(t)
            .into_iter()
            .map(|x| round_half_up(x) as i64)
            .collect();
        self.basis.point(coeffs)
    }
}

pub fn babai_round(b: &Basis, t: &[f64]) -> LatticeVector {
    Babai::new(b).round(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_rounding() {
        let id = Basis::identity(2);
        assert_eq!(babai_round(&id, &[0.4, -0.4]).coords, vec![0, 0]);
        assert_eq!(babai_round(&id, &[0.6, 1.2]).coords, vec![1, 1]);
        assert_eq!(babai_round(&id, &[0.5, -0.5]).coords, vec![1, 0]);
    }

    #[test]
    fn skewed_basis_recovers_point() {
        // columns (2,0) and (1,1)
        let b = Basis::new(vec![vec![2, 0], vec![1, 1]]).unwrap();
        let v = b.point(vec![-3, 4]);
        for frac in [[0.3, -0.2], [-0.45, 0.45], [0.1, 0.49]] {
            let off = super::super::linalg::combine(&b.to_real(), &frac);
            let t: Vec<f64> = v.to_real().iter().zip(&off).map(|(a, e)| a + e).collect();
            assert_eq!(babai_round(&b, &t), v);
        }
    }
}
