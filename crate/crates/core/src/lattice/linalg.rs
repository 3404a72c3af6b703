//! Small dense `f64` helpers. Vectors are plain slices; a "column list" is a
//! slice of basis vectors.

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm_sq(a: &[f64]) -> f64 {
    dot(a, a)
}

/// `sum_i x_i v_i`.
pub fn combine(cols: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
    let n = cols.first().map_or(0, |c| c.len());
    let mut out = vec![0.0; n];
    for (c, v) in x.iter().zip(cols) {
        for (o, e) in out.iter_mut().zip(v) {
            *o += c * e;
        }
    }
    out
}

pub fn combine_int(cols: &[Vec<f64>], x: &[i64]) -> Vec<f64> {
    let xs: Vec<f64> = x.iter().map(|&v| v as f64).collect();
    combine(cols, &xs)
}

/// Rows of `B^{-1}` for `B` given by columns, by Gauss-Jordan elimination with
/// partial pivoting. Returns `None` when a pivot is numerically zero.
pub fn inverse_rows(cols: &[Vec<f64>]) -> Option<Vec<Vec<f64>>> {
    let n = cols.len();
    // a = [B | I] in row-major form.
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|r| {
            let mut row: Vec<f64> = (0..n).map(|c| cols[c][r]).collect();
            row.extend((0..n).map(|c| if c == r { 1.0 } else { 0.0 }));
            row
        })
        .collect();
    let scale = a
        .iter()
        .flat_map(|r| r[..n].iter())
        .fold(0.0f64, |m, x| m.max(x.abs()));
    if scale == 0.0 {
        return None;
    }
    for k in 0..n {
        let p = (k..n).max_by(|&i, &j| a[i][k].abs().total_cmp(&a[j][k].abs()))?;
        if a[p][k].abs() <= scale * 1e-14 {
            return None;
        }
        a.swap(k, p);
        let inv = 1.0 / a[k][k];
        for x in a[k].iter_mut() {
            *x *= inv;
        }
        let pivot_row = a[k].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == k {
                continue;
            }
            let f = row[k];
            if f != 0.0 {
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// `M v` for a row-major `M`.
pub fn mat_vec(rows: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    rows.iter().map(|r| dot(r, v)).collect()
}

/// Infinity-norm condition estimate `||B||_inf ||B^{-1}||_inf`.
pub fn condition_estimate(cols: &[Vec<f64>], inv_rows: &[Vec<f64>]) -> f64 {
    let n = cols.len();
    let b_norm = (0..n)
        .map(|r| (0..n).map(|c| cols[c][r].abs()).sum::<f64>())
        .fold(0.0, f64::max);
    let inv_norm = inv_rows
        .iter()
        .map(|r| r.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max);
    b_norm * inv_norm
}
