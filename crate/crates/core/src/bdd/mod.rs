//! Bounded-distance decoding with preprocessing.
//!
//! Preprocessing draws a set `W` of dual-lattice Gaussian samples once. A
//! query climbs the periodic Gaussian `f_W` for a few steps and finishes with
//! Babai rounding.

mod advice;
mod config;
mod periodic;

pub use advice::{bddp_preprocess, bddp_query, BddpAdvice};
pub use config::{BddConfig, ALPHA_TARGET};
pub use periodic::{gradient_ascent_step, periodic_gaussian, periodic_gaussian_gradient, DIVERGENCE_FLOOR};
