//! The pseudo-random generator used for all sampling.
//!
//! ChaCha8 keyed from a 64-bit seed. Streams are reproducible within this
//! crate; no bit-compatibility with other implementations is promised.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type SpecRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SpecRng {
    ChaCha8Rng::seed_from_u64(seed)
}
