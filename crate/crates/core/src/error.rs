use thiserror::Error;

/// Errors surfaced by the solver pipeline.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("basis is rank deficient (pivot {index} vanished)")]
    RankDeficient { index: usize },

    #[error("malformed basis: {0}")]
    Shape(String),

    #[error("vector is not a member of the lattice")]
    NotInLattice,

    #[error("parameter s = {s} is below the sampler validity threshold {min}")]
    SamplerThreshold { s: f64, min: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("smoothing sum cannot be resolved by truncation (suggested radius {suggested_radius:.4})")]
    Truncation { suggested_radius: f64 },

    #[error("gradient ascent diverged: |f_W(t)| = {value:e}")]
    Divergence { value: f64 },

    #[error("every coset failed to decode")]
    AllCosetsFailed,

    #[error("dimension {n} exceeds the guard of {max}")]
    DimensionGuard { n: usize, max: usize },

    #[error("value {value} does not fit in {bits} integer bits")]
    FixedPointRange { value: f64, bits: u32 },

    #[error("fixed-point layouts differ: {0}")]
    LayoutMismatch(String),

    #[error("all sampled cosets decoded to zero; lattice is degenerate")]
    Degenerate,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
