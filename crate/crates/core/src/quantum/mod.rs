//! Classical simulation of the Grover-based search over coset candidates.
//!
//! The phase oracle is constant on the marked set `S` and on its complement,
//! so Grover iterations stay in the plane spanned by the two uniform
//! superpositions and a measurement after `T` iterations is marked with
//! probability `sin^2((2T + 1) theta)`, `sin theta = sqrt(|S| / N)`.
//! Only the query counts are physical; `U_BDDP` is charged by its
//! arithmetic-operation count.

mod filter;
mod grover;
mod search;

pub use filter::{
    encode_fixed_point, encode_saturating, filter_mark, filter_toffoli, mcx_toffoli, threshold_code, FixedLayout,
    FixedPointCode,
};
pub use grover::{grover_measure_sim, CostModel, GroverRun, QueryLedger};
pub use search::{
    initial_schedule, oracle_marked_set, qenum_p, qsvp, toffoli_estimate, CandidateTable, MarkedSet, OracleSpec,
    QsvpOutput,
};
