//! Seed to random stream mapping.
//!
//! Every stochastic draw comes from a ChaCha8 generator seeded through
//! `SeedableRng::seed_from_u64(seed)` with a fixed stream id per consumer.
//! `rand_chacha` guarantees value stability for this construction, so a seed
//! reproduces the same trace across releases and platforms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::Real;

pub(crate) const LOAD_STREAM: u64 = 0;
pub(crate) const THERMAL_STREAM: u64 = 1;

pub(crate) fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

/// Uniform draw on `[lo, hi]`. Degenerate ranges still consume one draw so
/// stream positions do not depend on the bounds.
pub(crate) fn uniform<T: Real>(rng: &mut ChaCha8Rng, lo: T, hi: T) -> T {
    let u: f64 = rng.gen();
    (lo + (hi - lo) * T::lit(u)).max(lo).min(hi)
}
