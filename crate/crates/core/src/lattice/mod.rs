//! Exact integer lattices and the floating-point machinery around them.
//!
//! Bases are stored column-wise: `vectors()[i]` is the basis vector `b_i`,
//! and a lattice point is `B x = sum_i x_i b_i` for an integer vector `x`.
//! Everything that must compare equal (coefficients, cosets, squared norms)
//! is done in integer arithmetic; Gram-Schmidt data and dual bases are `f64`.

mod basis;
mod coset;
mod dual;
pub mod enumerate;
pub mod exact;
mod generate;
mod gso;
pub mod io;
pub mod linalg;
mod lll;
mod rounding;

pub use basis::{Basis, LatticeVector};
pub use coset::{mod_pl, CosetIndex};
pub use dual::{dual_basis, dual_for_sampling, DualBasis};
pub use generate::{gen_lattice, LatticeKind};
pub use gso::{gram_schmidt, gram_schmidt_real, GsoData};
pub use lll::{is_lll_reduced, lll_reduce, lll_reduce_with_transform, LllOutput, DEFAULT_DELTA};
pub use rounding::{babai_round, round_half_up, Babai};
