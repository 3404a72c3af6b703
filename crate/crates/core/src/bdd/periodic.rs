use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::lattice::linalg::dot;
use crate::sampling::DualSampleSet;

/// `|f_W(t)|` below this aborts an ascent step.
pub const DIVERGENCE_FLOOR: f64 = 1e-12;

/// `f_W(t) = (1/N) sum_i cos(2 pi <w_i, t>)`.
pub fn periodic_gaussian(w: &DualSampleSet, t: &[f64]) -> f64 {
    let sum: f64 = w.samples.iter().map(|x| (2.0 * PI * dot(&x.coords, t)).cos()).sum();
    sum / w.len() as f64
}

/// `grad f_W(t) = -(2 pi / N) sum_i sin(2 pi <w_i, t>) w_i`.
pub fn periodic_gaussian_gradient(w: &DualSampleSet, t: &[f64]) -> Vec<f64> {
    let mut g = vec![0.0; t.len()];
    for x in &w.samples {
        let s = (2.0 * PI * dot(&x.coords, t)).sin();
        for (gi, wi) in g.iter_mut().zip(&x.coords) {
            *gi += s * wi;
        }
    }
    let k = -2.0 * PI / w.len() as f64;
    g.iter_mut().for_each(|gi| *gi *= k);
    g
}

/// One step `t + grad f_W(t) / (2 pi s^2 f_W(t))`, where `s` is the
/// parameter `W` was sampled at.
pub fn gradient_ascent_step(w: &DualSampleSet, t: &[f64]) -> Result<Vec<f64>> {
    let f = periodic_gaussian(w, t);
    if f.abs() < DIVERGENCE_FLOOR {
        return Err(Error::Divergence { value: f });
    }
    let s = w.s.get();
    let k = 1.0 / (2.0 * PI * s * s * f);
    let g = periodic_gaussian_gradient(w, t);
    Ok(t.iter().zip(&g).map(|(ti, gi)| ti + k * gi).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Basis;
    use crate::sampling::{DualSample, GaussianParam};

    fn z1(ws: &[i64], s: f64) -> DualSampleSet {
        DualSampleSet {
            samples: ws
                .iter()
                .map(|&w| DualSample { coords: vec![w as f64], pairing: vec![w] })
                .collect(),
            s: GaussianParam::new(s).unwrap(),
            basis: Basis::identity(1),
        }
    }

    #[test]
    fn hand_values() {
        let w = z1(&[1, -1, 2], 1.0);
        assert_eq!(periodic_gaussian(&w, &[0.0]), 1.0);
        assert!((periodic_gaussian(&w, &[0.25]) + 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(periodic_gaussian_gradient(&w, &[0.0]), vec![0.0]);
        // terms w sin(2 pi w t): 1, 1, 0
        let g = periodic_gaussian_gradient(&w, &[0.25]);
        let by_hand = -(2.0 * PI / 3.0) * 2.0;
        assert!((g[0] - by_hand).abs() < 1e-12);
    }

    #[test]
    fn divergence() {
        let w = z1(&[1], 1.0);
        assert!(matches!(gradient_ascent_step(&w, &[0.25]), Err(Error::Divergence { .. })));
    }

    #[test]
    fn fixed_on_lattice() {
        let w = z1(&[1, -3, 2, 5], 2.0);
        let out = gradient_ascent_step(&w, &[3.0]).unwrap();
        assert!((out[0] - 3.0).abs() < 1e-9);
    }
}
