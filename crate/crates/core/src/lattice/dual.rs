use log::warn;

use super::linalg::{condition_estimate, inverse_rows};
use super::Basis;
use crate::error::{Error, Result};

/// Condition estimates above this are logged when computing a dual.
pub const ILL_CONDITIONED: f64 = 1e12;

/// Dual basis `D = (B^T)^{-1}`, stored by columns `d_j` with `<b_i, d_j> = delta_ij`.
#[derive(Debug, Clone, PartialEq)]
pub struct DualBasis {
    pub vectors: Vec<Vec<f64>>,
    pub condition: f64,
}

pub fn dual_basis(b: &Basis) -> Result<DualBasis> {
    dual_of_real(&b.to_real())
}

/// Dual of a real basis; the columns of `(B^T)^{-1}` are the rows of `B^{-1}`.
pub fn dual_of_real(cols: &[Vec<f64>]) -> Result<DualBasis> {
    let rows = inverse_rows(cols).ok_or(Error::RankDeficient { index: cols.len() - 1 })?;
    let condition = condition_estimate(cols, &rows);
    if condition > ILL_CONDITIONED {
        warn!("dual basis of an ill-conditioned basis (condition ~ {condition:.3e})");
    }
    Ok(DualBasis {
        vectors: rows,
        condition,
    })
}

/// The dual basis in reversed order. For an LLL-reduced primal basis this
/// ordering has Gram-Schmidt norms `1/||b*_{n+1-i}||`, which keeps the
/// largest one as small as the primal allows.
pub fn dual_for_sampling(b: &Basis) -> Result<DualBasis> {
    let mut d = dual_basis(b)?;
    d.vectors.reverse();
    Ok(d)
}
