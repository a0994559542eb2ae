use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::Serialize;

/// Tag of the only generator in use: ChaCha with 20 rounds, keyed by `seed_from_u64`.
pub const ALGORITHM_ID: &str = "chacha20";

/// Position-addressable stream of uniforms on the open unit interval.
///
/// Draw `i` depends only on `(seed, i)`, so any slice of the sequence can be
/// regenerated on its own.
#[derive(Debug, Clone, Serialize)]
pub struct SeededStream {
    pub algorithm_id: &'static str,
    pub seed: u64,
    pub position: u64,
    #[serde(skip)]
    rng: ChaCha20Rng,
}

impl SeededStream {
    pub fn new(seed: u64) -> Self {
        Self::at(seed, 0)
    }

    /// Stream positioned at draw `position`.
    pub fn at(seed: u64, position: u64) -> Self {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        // Each draw consumes two 32-bit words.
        rng.set_word_pos(u128::from(position) * 2);
        SeededStream {
            algorithm_id: ALGORITHM_ID,
            seed,
            position,
            rng,
        }
    }

    pub fn next_uniform(&mut self) -> f64 {
        self.position += 1;
        to_open_unit(self.rng.next_u64())
    }

    pub fn fill(&mut self, out: &mut [f64]) {
        for x in out {
            *x = self.next_uniform();
        }
    }
}

impl Iterator for SeededStream {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        Some(self.next_uniform())
    }
}

/// Midpoint of one of 2^52 equal cells. With 53 cells the top midpoint
/// `1 - 2^-54` would round to 1.
fn to_open_unit(k: u64) -> f64 {
    ((k >> 12) as f64 + 0.5) * (1.0 / (1u64 << 52) as f64)
}
