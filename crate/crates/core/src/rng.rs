//! Seed derivation for named sub-streams.
//!
//! All randomness in the crate flows from a single 64-bit seed. Independent
//! sub-streams (per recursion level, per stream epoch, per purpose) are
//! derived by mixing the root seed with a purpose tag and an index, then fed
//! into a counter-based ChaCha generator. Identical (seed, tag, index)
//! triples give identical streams across runs and platforms.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// splitmix64 finalizer; full-period mixing of a 64-bit state.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn tag_hash(tag: &str) -> u64 {
    // FNV-1a, stable across platforms.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in tag.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Derives a child seed from (root, tag, index).
pub fn derive_seed(root: u64, tag: &str, index: u64) -> u64 {
    mix(root ^ mix(tag_hash(tag)) ^ mix(index.wrapping_mul(0x9e37_79b9_7f4a_7c15)))
}

/// Counter-based generator for a named sub-stream.
pub fn stream_rng(root: u64, tag: &str, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(root, tag, index))
}
