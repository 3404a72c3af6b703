use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

use super::Basis;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LatticeKind {
    /// Entries uniform in `[-2^(bits-1), 2^(bits-1))`.
    Uniform { bits: u32 },
    /// Knapsack-style: identity block on the first `n-1` coordinates and one
    /// dense last row; the last vector is `M e_n` with `M` a random `bits`-bit
    /// modulus.
    Knapsack { bits: u32 },
    ScaledIdentity { scale: i64 },
}

/// Deterministic test lattice; singular draws are resampled from the same stream.
pub fn gen_lattice(kind: LatticeKind, n: usize, seed: u64) -> Basis {
    assert!(n >= 1, "dimension must be positive");
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    match kind {
        LatticeKind::ScaledIdentity { scale } => Basis::scaled_identity(n, scale),
        LatticeKind::Uniform { bits } => {
            assert!((1..=40).contains(&bits), "bits must be in 1..=40");
            let half = 1i64 << (bits - 1);
            loop {
                let vectors = (0..n)
                    .map(|_| (0..n).map(|_| rng.gen_range(-half..half)).collect())
                    .collect();
                if let Ok(b) = Basis::new(vectors) {
                    return b;
                }
            }
        }
        LatticeKind::Knapsack { bits } => {
            assert!((1..=40).contains(&bits), "bits must be in 1..=40");
            let m: i64 = if bits == 1 { 1 } else { rng.gen_range((1i64 << (bits - 1))..(1i64 << bits)) };
            let vectors = (0..n)
                .map(|i| {
                    let mut v = vec![0i64; n];
                    if i + 1 == n {
                        v[n - 1] = m;
                    } else {
                        v[i] = 1;
                        v[n - 1] = rng.gen_range(0..m);
                    }
                    v
                })
                .collect();
            Basis::new(vectors).expect("knapsack basis has determinant M")
        }
    }
}
