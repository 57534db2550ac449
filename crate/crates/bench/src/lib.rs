//! Shared inputs for the benchmarks.

use twsurf_core::corpus;
use twsurf_core::PolyGenerators;

/// Deterministic generator pairs of the given degrees.
pub fn generator_pairs(m: u32, n: u32, count: usize) -> Vec<PolyGenerators> {
    let mut rng = corpus::rng(42);
    (0..count)
        .map(|_| corpus::generators(&mut rng, m, n))
        .collect()
}
