//! Deterministic pseudo-randomness for reproducible suites.
//!
//! The generator is SplitMix64: the state advances by the 64-bit golden-ratio
//! constant and each output is the two-round xor-multiply finalizer of the new
//! state. Randomized suites derive an independent stream per trial with
//! [`SplitMix64::derive`], so a report depends only on the root seed and the
//! trial index, never on scheduling.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// SplitMix64 stream.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Stream for trial `index` under root `seed`.
    ///
    /// The trial seed is `mix(seed ^ mix((index + 1) * GOLDEN))`, which keeps
    /// distinct (seed, index) pairs on distinct streams.
    pub fn derive(seed: u64, index: u64) -> Self {
        let salt = mix(index.wrapping_add(1).wrapping_mul(GOLDEN));
        SplitMix64::new(mix(seed ^ salt))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix(self.state)
    }

    /// Uniform draw from `0..bound` by rejection sampling. `bound` must be
    /// nonzero.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "below(0) is undefined");
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            xs.swap(i, j);
        }
    }
}
