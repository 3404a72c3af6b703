use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sampling::epsilon_for_dim;

/// Decoding radius, as a fraction of `lambda_1`, used to generate test targets.
pub const ALPHA_TARGET: f64 = 0.391;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BddConfig {
    /// Number of dual samples in the advice.
    pub samples: usize,
    pub ascent_iters: usize,
    pub epsilon: f64,
    pub alpha_target: f64,
}

impl BddConfig {
    /// `N = max(1000, 200 n)`, two ascent steps, `epsilon = epsilon_for_dim(n)`.
    pub fn for_dim(n: usize) -> Self {
        BddConfig {
            samples: 1000.max(200 * n),
            ascent_iters: 2,
            epsilon: epsilon_for_dim(n),
            alpha_target: ALPHA_TARGET,
        }
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::InvalidParameter("sample count must be >= 1".into()));
        }
        if self.ascent_iters == 0 {
            return Err(Error::InvalidParameter("ascent_iters must be >= 1".into()));
        }
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(Error::InvalidParameter(format!("epsilon = {} must lie in (0, 1)", self.epsilon)));
        }
        if !(self.alpha_target > 0.0 && self.alpha_target < 0.5) {
            return Err(Error::InvalidParameter(format!("alpha = {} must lie in (0, 1/2)", self.alpha_target)));
        }
        Ok(())
    }

    /// `s_eps = sqrt(ln(2(1 + eps)/eps) / pi)`.
    pub fn s_eps(&self) -> f64 {
        let e = self.epsilon;
        ((2.0 * (1.0 + e) / e).ln() / std::f64::consts::PI).sqrt()
    }

    /// `1/2 - 2/(pi s_eps^2)`.
    pub fn delta_max(&self) -> f64 {
        let s = self.s_eps();
        0.5 - 2.0 / (std::f64::consts::PI * s * s)
    }

    /// `max(1/8, ||t|| / s_eps)`.
    pub fn zeta(&self, t_norm: f64) -> f64 {
        (t_norm / self.s_eps()).max(0.125)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = BddConfig::for_dim(3);
        assert_eq!(c.samples, 1000);
        assert_eq!(BddConfig::for_dim(8).samples, 1600);
        assert_eq!(c.ascent_iters, 2);
        c.validate().unwrap();
    }

    #[test]
    fn diagnostics() {
        let c = BddConfig { epsilon: 0.5, ..BddConfig::for_dim(2) };
        let s = (6f64.ln() / std::f64::consts::PI).sqrt();
        assert!((c.s_eps() - s).abs() < 1e-15);
        assert!((c.delta_max() - (0.5 - 2.0 / (std::f64::consts::PI * s * s))).abs() < 1e-15);
        assert_eq!(c.zeta(0.0), 0.125);
        assert!((c.zeta(2.0 * s) - 2.0).abs() < 1e-12);
        // delta_max climbs toward 1/2 as eps shrinks
        let tiny = BddConfig { epsilon: 1e-12, ..c.clone() };
        assert!(tiny.delta_max() > c.delta_max() && tiny.delta_max() < 0.5);
    }

    #[test]
    fn rejects_bad_fields() {
        let c = BddConfig::for_dim(2);
        assert!(BddConfig { samples: 0, ..c.clone() }.validate().is_err());
        assert!(BddConfig { ascent_iters: 0, ..c.clone() }.validate().is_err());
        assert!(BddConfig { alpha_target: 0.5, ..c.clone() }.validate().is_err());
        assert!(BddConfig { epsilon: 1.0, ..c }.validate().is_err());
    }
}
