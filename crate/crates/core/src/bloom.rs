//! Concurrent Bloom filter used to drop duplicate DP states.
//!
//! Keys are hashed twice with Murmur3 (x86, 32-bit) under two fixed seeds;
//! probe `i` (for `i = 1..=k`) lands on bit `(h1 + i * h2) mod m`. An insert
//! reports `true` iff at least one probed bit was clear.
//!
//! Two threads inserting the same key at the same time could otherwise both
//! observe a clear bit and both report `true`, so the whole probe sequence for
//! one key runs under one of 65,536 stripe locks chosen by `h1`.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;

pub const SEED_1: u32 = 0x9747_B28C;
pub const SEED_2: u32 = 0x5EED_BA5E;
pub const STRIPES: usize = 65_536;

/// Murmur3 x86 32-bit.
pub fn murmur3_32(data: &[u8], seed: u32) -> u32 {
    const C1: u32 = 0xcc9e_2d51;
    const C2: u32 = 0x1b87_3593;

    let mut h = seed;
    let mut blocks = data.chunks_exact(4);
    for block in &mut blocks {
        let mut k = u32::from_le_bytes(block.try_into().unwrap());
        k = k.wrapping_mul(C1).rotate_left(15).wrapping_mul(C2);
        h ^= k;
        h = h.rotate_left(13).wrapping_mul(5).wrapping_add(0xe654_6b64);
    }
    let tail = blocks.remainder();
    if !tail.is_empty() {
        let mut k = 0u32;
        for (i, &b) in tail.iter().enumerate() {
            k |= (b as u32) << (8 * i);
        }
        k = k.wrapping_mul(C1).rotate_left(15).wrapping_mul(C2);
        h ^= k;
    }
    h ^= data.len() as u32;
    h ^= h >> 16;
    h = h.wrapping_mul(0x85eb_ca6b);
    h ^= h >> 13;
    h = h.wrapping_mul(0xc2b2_ae35);
    h ^ (h >> 16)
}

/// The two base hashes of an 8-byte key.
#[inline]
pub fn hash_pair(key: &[u8; 8]) -> (u32, u32) {
    (murmur3_32(key, SEED_1), murmur3_32(key, SEED_2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BloomParams {
    pub bits_per_element: usize,
    pub num_hashes: usize,
    pub capacity: usize,
}

impl BloomParams {
    pub fn new(capacity: usize) -> Self {
        BloomParams {
            capacity,
            ..Default::default()
        }
    }

    /// Bit count: `capacity * bits_per_element`, rounded up to whole words.
    pub fn num_bits(&self) -> usize {
        let raw = self.capacity.max(1) * self.bits_per_element.max(1);
        raw.div_ceil(64) * 64
    }
}

impl Default for BloomParams {
    fn default() -> Self {
        BloomParams {
            bits_per_element: 24,
            num_hashes: 17,
            capacity: 1,
        }
    }
}

/// `(1 - e^{-kn/m})^k` for `n = inserted`.
pub fn theoretical_fp_rate(params: &BloomParams, inserted: usize) -> f64 {
    let k = params.num_hashes as f64;
    let m = params.num_bits() as f64;
    (1.0 - (-k * inserted as f64 / m).exp()).powf(k)
}

pub struct ConcurrentBloom {
    words: Vec<AtomicU64>,
    stripes: Vec<Mutex<()>>,
    params: BloomParams,
    num_bits: u64,
    inserts: AtomicUsize,
}

impl ConcurrentBloom {
    pub fn new(params: BloomParams) -> Self {
        let num_bits = params.num_bits();
        ConcurrentBloom {
            words: (0..num_bits / 64).map(|_| AtomicU64::new(0)).collect(),
            stripes: (0..STRIPES).map(|_| Mutex::new(())).collect(),
            params,
            num_bits: num_bits as u64,
            inserts: AtomicUsize::new(0),
        }
    }

    pub fn params(&self) -> &BloomParams {
        &self.params
    }

    pub fn num_bits(&self) -> usize {
        self.num_bits as usize
    }

    /// Bit positions probed for a key with base hashes `(h1, h2)`.
    pub fn positions(&self, h1: u32, h2: u32) -> impl Iterator<Item = u64> + '_ {
        let m = self.num_bits;
        (1..=self.params.num_hashes as u64).map(move |i| (h1 as u64 + i * h2 as u64) % m)
    }

    /// Sets the key's bits; `true` iff the key was not yet present.
    pub fn insert_and_check(&self, key: &[u8; 8]) -> bool {
        let (h1, h2) = hash_pair(key);
        let _guard = self.stripes[h1 as usize % STRIPES]
            .lock()
            .unwrap_or_else(|e| e.into_inner());
        self.inserts.fetch_add(1, Ordering::Relaxed);
        let mut was_absent = false;
        for pos in self.positions(h1, h2) {
            let mask = 1u64 << (pos % 64);
            let prev = self.words[(pos / 64) as usize].fetch_or(mask, Ordering::Relaxed);
            was_absent |= prev & mask == 0;
        }
        was_absent
    }

    /// Membership query; does not modify the filter.
    pub fn contains(&self, key: &[u8; 8]) -> bool {
        let (h1, h2) = hash_pair(key);
        self.positions(h1, h2).all(|pos| {
            self.words[(pos / 64) as usize].load(Ordering::Relaxed) >> (pos % 64) & 1 == 1
        })
    }

    /// Clears every bit. Callers must ensure no insert is in flight.
    pub fn reset(&mut self) {
        if *self.inserts.get_mut() == 0 {
            return;
        }
        self.words
            .par_iter_mut()
            .with_min_len(1 << 14)
            .for_each(|w| *w.get_mut() = 0);
        *self.inserts.get_mut() = 0;
    }

    /// Number of set bits.
    pub fn population(&self) -> usize {
        self.words
            .iter()
            .map(|w| w.load(Ordering::Relaxed).count_ones() as usize)
            .sum()
    }
}
