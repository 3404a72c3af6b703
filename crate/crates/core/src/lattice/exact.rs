//! Exact rational linear algebra over integer bases.

use num::{BigInt, BigRational, One, Signed, Zero};

/// Determinant of the matrix whose columns are `cols` (fraction-free Bareiss).
pub fn determinant(cols: &[Vec<i64>]) -> BigInt {
    let n = cols.len();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|r| (0..n).map(|c| BigInt::from(cols[c][r])).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Index of the first column that lies in the span of the preceding ones.
pub fn first_dependent_column(cols: &[Vec<i64>]) -> Option<usize> {
    let n = cols.first().map_or(0, |c| c.len());
    let mut echelon: Vec<(usize, Vec<BigRational>)> = Vec::new();
    for (ci, col) in cols.iter().enumerate() {
        let mut v: Vec<BigRational> = col.iter().map(|&x| BigRational::from_integer(x.into())).collect();
        for (pivot, row) in &echelon {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = v[*pivot].clone() / &row[*pivot];
            for (a, b) in v.iter_mut().zip(row) {
                *a -= &f * b;
            }
        }
        match (0..n).find(|&r| !v[r].is_zero()) {
            Some(p) => echelon.push((p, v)),
            None => return Some(ci),
        }
    }
    None
}

/// Solves `B x = v` over the rationals, `B` given by columns.
pub fn solve(cols: &[Vec<i64>], v: &[i64]) -> Option<Vec<BigRational>> {
    let n = cols.len();
    if v.len() != n {
        return None;
    }
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            let mut row: Vec<BigRational> = (0..n)
                .map(|c| BigRational::from_integer(cols[c][r].into()))
                .collect();
            row.push(BigRational::from_integer(v[r].into()));
            row
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&r| !a[r][k].is_zero())?;
        a.swap(k, p);
        let inv = a[k][k].recip();
        for x in a[k].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[k].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == k || row[k].is_zero() {
                continue;
            }
            let f = row[k].clone();
            for (x, p) in row[k..].iter_mut().zip(&pivot[k..]) {
                *x -= &f * p;
            }
        }
    }
    Some(a.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

pub fn integer_coefficients(cols: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    let x = solve(cols, v)?;
    x.iter()
        .map(|q| {
            if q.is_integer() {
                i64::try_from(q.to_integer()).ok()
            } else {
                None
            }
        })
        .collect()
}

/// Exact change of basis `U` with `new_j = sum_i U[j][i] old_i`, if every new
/// vector has integer coefficients over the old basis.
pub fn change_of_basis(old: &[Vec<i64>], new: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    new.iter().map(|v| integer_coefficients(old, v)).collect()
}

/// True when `U` is integral with determinant +-1 in both directions, i.e.
/// the two bases generate the same lattice.
pub fn same_lattice(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    match change_of_basis(a, b) {
        Some(u) => determinant(&u).abs().is_one(),
        None => false,
    }
}
