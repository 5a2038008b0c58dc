//! `0 1 00 11 0000 1111 …`: paired runs of `2^m` zeros and `2^m` ones.
//!
//! The running mean sits near `1/3` at the end of every zero-run and at
//! exactly `1/2` at the end of every one-run, so the digit mean has no limit.

use crate::radix::Radix;
use crate::stream::DigitStream;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NoMeanExample {
    radix: Radix,
}

impl NoMeanExample {
    pub fn new(radix: Radix) -> Self {
        NoMeanExample { radix }
    }

    /// Depth at the end of the zero-run of length `2^m`: `3·2^m − 2`.
    pub fn zero_run_end(m: u32) -> u64 {
        3 * (1u64 << m) - 2
    }

    /// Depth at the end of the one-run of length `2^m`: `2^{m+2} − 2`.
    pub fn one_run_end(m: u32) -> u64 {
        (1u64 << (m + 2)) - 2
    }

    /// Every zero-run and one-run end up to `max`, ascending.
    pub fn run_ends(max: u64) -> Vec<u64> {
        (0..62)
            .flat_map(|m| [Self::zero_run_end(m), Self::one_run_end(m)])
            .take_while(|&n| n <= max)
            .collect()
    }
}

impl Default for NoMeanExample {
    fn default() -> Self {
        NoMeanExample::new(Radix::BINARY)
    }
}

impl DigitStream for NoMeanExample {
    fn radix(&self) -> Radix {
        self.radix
    }

    fn digits(&self) -> Box<dyn Iterator<Item = u8> + '_> {
        Box::new((0u32..63).flat_map(|m| {
            let len = 1usize << m;
            std::iter::repeat_n(0, len).chain(std::iter::repeat_n(1, len))
        }))
    }
}

/// First `n` digits.
pub fn no_mean_example(n: usize) -> Vec<u8> {
    NoMeanExample::default().digits().take(n).collect()
}
