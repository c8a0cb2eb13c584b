//! Reproducible sampling configuration and chunked random streams.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{domain, Result};
use crate::numerics::QuadratureSpec;
use crate::units::Units;

pub const DEFAULT_SEED: u64 = 0x5EED_2015;
pub const DEFAULT_SAMPLES: usize = 100_000;
pub const DEFAULT_CHUNKS: usize = 8;

/// Settings shared by every stochastic or numerical estimator.
///
/// Two runs with equal configs produce bitwise identical results, whatever
/// the size of the rayon thread pool.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimConfig {
    pub seed: u64,
    pub samples: usize,
    pub chunks: usize,
    pub quadrature: QuadratureSpec,
    pub units: Units,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig {
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            chunks: DEFAULT_CHUNKS,
            quadrature: QuadratureSpec::default(),
            units: Units::Bits,
        }
    }
}

impl SimConfig {
    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return domain("samples must be >= 1");
        }
        if self.chunks == 0 {
            return domain("chunks must be >= 1");
        }
        self.quadrature.validate()
    }
}

/// The random stream for chunk `index` of a run seeded with `seed`.
pub fn chunk_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Sizes of the `chunks` pieces that `count` is split into; the first
/// `count % chunks` pieces carry one extra draw.
pub fn chunk_sizes(count: usize, chunks: usize) -> Vec<usize> {
    let chunks = chunks.max(1);
    let base = count / chunks;
    let extra = count % chunks;
    (0..chunks).map(|i| base + usize::from(i < extra)).collect()
}

/// Draws `count` values by running `draw` on independent per-chunk streams
/// in parallel and concatenating the chunks in index order.
pub fn sample_chunked<F>(seed: u64, count: usize, chunks: usize, draw: F) -> Vec<f64>
where
    F: Fn(&mut ChaCha8Rng, usize) -> Vec<f64> + Sync,
{
    let sizes = chunk_sizes(count, chunks);
    let parts: Vec<Vec<f64>> = sizes
        .par_iter()
        .enumerate()
        .map(|(i, &n)| {
            let mut rng = chunk_rng(seed, i as u64);
            draw(&mut rng, n)
        })
        .collect();
    parts.concat()
}
