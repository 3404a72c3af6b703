//! Space-efficient shortest-vector search.
//!
//! The pipeline: LLL-reduce the input basis, draw a one-time set of discrete
//! Gaussian samples over the dual lattice, and use the periodic Gaussian
//! estimator built from them as a bounded-distance decoder. Decoding the
//! `3^n` targets `B s / 3` for `s in Z_3^n` yields every lattice vector
//! shorter than `1.17 lambda_1`, so the shortest of them solves SVP.
//! [`quantum`] replaces the classical coset scan with a simulated Grover
//! minimum search and accounts for its oracle queries.

pub mod bdd;
pub mod enumeration;
mod error;
pub mod lattice;
pub mod oracle;
pub mod quantum;
pub mod sampling;
pub mod seed;

pub use error::{Error, Result};
