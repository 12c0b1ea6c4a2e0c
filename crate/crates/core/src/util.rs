//! Small numeric and hashing helpers shared across modules.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// SplitMix64 step; used to derive independent seeds from one root seed.
pub(crate) fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Mix a seed with an arbitrary number of stream identifiers.
pub(crate) fn mix_seed(seed: u64, streams: &[u64]) -> u64 {
    let mut s = splitmix64(seed ^ 0x6a09e667f3bcc909);
    for &x in streams {
        s = splitmix64(s ^ x);
    }
    s
}

/// Deterministic RNG for a derived stream.
pub(crate) fn stream_rng(seed: u64, streams: &[u64]) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(mix_seed(seed, streams))
}

/// FNV-1a over a string; stable across platforms and runs.
pub(crate) fn fnv1a64(s: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in s.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Dot product with four accumulators. The summation order is fixed, so
/// results are reproducible run to run.
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let chunks = a.len() / 4 * 4;
    let (mut s0, mut s1, mut s2, mut s3) = (0.0, 0.0, 0.0, 0.0);
    let mut i = 0;
    while i < chunks {
        s0 += a[i] * b[i];
        s1 += a[i + 1] * b[i + 1];
        s2 += a[i + 2] * b[i + 2];
        s3 += a[i + 3] * b[i + 3];
        i += 4;
    }
    let mut tail = 0.0;
    while i < a.len() {
        tail += a[i] * b[i];
        i += 1;
    }
    (s0 + s1) + (s2 + s3) + tail
}

/// `acc += scale * v`, element-wise.
pub(crate) fn axpy(acc: &mut [f64], scale: f64, v: &[f64]) {
    debug_assert_eq!(acc.len(), v.len());
    for (a, x) in acc.iter_mut().zip(v) {
        *a += scale * x;
    }
}

pub(crate) fn sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_matches_naive() {
        let a: Vec<f64> = (0..13).map(|i| i as f64 * 0.5 - 3.0).collect();
        let b: Vec<f64> = (0..13).map(|i| 1.0 / (i as f64 + 1.0)).collect();
        let naive: f64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
        assert!((dot(&a, &b) - naive).abs() < 1e-12);
    }

    #[test]
    fn mix_seed_streams_differ() {
        assert_ne!(mix_seed(1, &[0]), mix_seed(1, &[1]));
        assert_ne!(mix_seed(1, &[0]), mix_seed(2, &[0]));
        assert_eq!(mix_seed(7, &[3, 4]), mix_seed(7, &[3, 4]));
    }
}
