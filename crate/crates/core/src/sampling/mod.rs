//! Discrete Gaussians: `rho_s`, samplers, and the smoothing parameter.

mod discrete;
mod smoothing;

pub use discrete::{
    dual_sampler_threshold, rho, sample_dg_1d, sample_dual_set, sample_lattice_gaussian, DualSample, DualSampleSet, GaussianParam,
    GaussianSampler, VALIDITY_FACTOR,
};
pub use smoothing::{dual_smoothing_parameter, epsilon_for_dim, smoothing_parameter, SmoothingQuery, BETA_SQ_OVER_E};
