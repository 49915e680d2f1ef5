//! SplitMix64, the generator behind every seeded instance in this crate.
//!
//! The state starts at the seed; each draw adds `0x9E3779B97F4A7C15` to the
//! state and returns the mixed value
//!
//! ```text
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! z ^ (z >> 31)
//! ```
//!
//! with wrapping 64-bit arithmetic. Derived draws:
//! - `coin()`: the top bit of one draw;
//! - `below(m)`: the high 64 bits of `draw * m` (128-bit product);
//! - `chance(p/q)`: `below(q) < p`.
//!
//! Anything that reproduces these three rules reproduces every generated
//! instance bit for bit.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    /// Uniform-ish value in `0..bound` (multiply-high, no rejection).
    pub fn below(&mut self, bound: u64) -> u64 {
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }

    /// Value in `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.below(hi - lo + 1)
    }

    pub fn chance(&mut self, p: Ratio) -> bool {
        self.below(p.den) < p.num
    }

    /// Fisher-Yates with `below`.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

/// A probability `num / den` with `num <= den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Option<Self> {
        (den > 0 && num <= den).then_some(Self { num, den })
    }

    pub const ZERO: Ratio = Ratio { num: 0, den: 1 };
    pub const QUARTER: Ratio = Ratio { num: 1, den: 4 };
}

impl Default for Ratio {
    fn default() -> Self {
        Self::QUARTER
    }
}
