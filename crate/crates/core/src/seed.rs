//! Seed streams.
//!
//! A run is driven by one user seed. Each phase draws from its own stream,
//! `splitmix64(seed ^ tag)`, so a phase can be replayed without running the
//! ones before it.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

pub type SvpRng = ChaCha12Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stream {
    Reduce,
    Sample,
    Solve,
    /// Free-form stream, e.g. one per trial or worker.
    Index(u64),
}

impl Stream {
    fn tag(self) -> u64 {
        match self {
            Stream::Reduce => 0x5245_4455_4345_0001,
            Stream::Sample => 0x5341_4d50_4c45_0002,
            Stream::Solve => 0x534f_4c56_4500_0003,
            Stream::Index(i) => 0x4944_5800_0000_0000 ^ i.wrapping_mul(0x9e37_79b9_7f4a_7c15),
        }
    }
}

pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn derive_seed(seed: u64, stream: Stream) -> u64 {
    splitmix64(seed ^ stream.tag())
}

pub fn rng_for(seed: u64, stream: Stream) -> SvpRng {
    SvpRng::seed_from_u64(derive_seed(seed, stream))
}
