//! Seeded random streams.
//!
//! Monte-Carlo work is split into fixed-size shards. Shard `k` of a run
//! seeded with `s` always draws from ChaCha stream `k` of key `s`, so the
//! merged result does not depend on how rayon schedules the shards.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type GcRng = ChaCha8Rng;

/// Samples per Monte-Carlo shard.
pub const SHARD_SIZE: u64 = 1 << 16;

pub fn seeded(seed: u64) -> GcRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn shard_stream(seed: u64, shard: u64) -> GcRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(shard);
    rng
}

/// Splits `n` samples into `(shard index, shard length)` pairs.
pub fn shards(n: u64) -> impl Iterator<Item = (u64, u64)> + Clone {
    let count = n.div_ceil(SHARD_SIZE);
    (0..count).map(move |k| {
        let start = k * SHARD_SIZE;
        (k, SHARD_SIZE.min(n - start))
    })
}
