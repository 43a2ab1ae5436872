//! Small deterministic pseudo-random bits.
//!
//! One mixing function serves two jobs: hashing packed cell keys in the
//! open-addressed cell index, and driving reproducible sampling in the
//! search tooling. No entropy sources anywhere — identical seeds give
//! identical streams on every platform.

/// The splitmix64 finalizer: a fast, well-distributed 64-bit mixer.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The splitmix64 generator: a golden-ratio counter pushed through
/// [`mix64`].
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        mix64(self.state)
    }

    /// Uniform value in `[0, bound)` by rejection from the top of the
    /// range, so every bound is exactly uniform.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty sampling range");
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }
}
