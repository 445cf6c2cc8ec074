//! Benchmark fixtures.

use gamma_depth_core::families::{power_of_m, random_ideal, random_module, rm_ord_example, RandomShape};
use gamma_depth_core::{PresentedModule, Ring, Submodule};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn order_example() -> PresentedModule {
    rm_ord_example(Ring::new(2))
}

/// `R/m^{r+1}` in `n` variables.
pub fn truncated_ring(n: usize, r: u32) -> PresentedModule {
    power_of_m(Ring::new(n), r)
}

/// Seeded random ideals in `n` variables.
pub fn random_ideals(n: usize, count: usize, seed: u64) -> Vec<Submodule> {
    let ring = Ring::new(n);
    (0..count as u64)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ i);
            Submodule::ideal(ring, random_ideal(ring, RandomShape::default(), &mut rng)).unwrap()
        })
        .collect()
}

pub fn random_modules(n: usize, count: usize, seed: u64) -> Vec<PresentedModule> {
    let ring = Ring::new(n);
    (0..count as u64)
        .map(|i| random_module(ring, RandomShape::default(), &mut ChaCha8Rng::seed_from_u64(seed ^ i)))
        .collect()
}
