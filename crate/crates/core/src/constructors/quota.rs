//! Greedy quota scheduling of digits.
//!
//! At step `m` the digit with the largest deficit `m·τ_i − N_i(m−1)` is
//! emitted, ties going to the smallest digit. Every count then stays within
//! 2 of its quota `m·τ_i` at every prefix, so all frequencies exist and equal
//! `τ`.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::radix::Radix;
use crate::stats::FrequencyProfile;
use crate::stream::DigitStream;

/// Unbounded digit stream realising a [`FrequencyProfile`].
#[derive(Debug, Clone)]
pub struct QuotaDigits {
    profile: FrequencyProfile,
    // τ_i scaled to a common denominator
    weights: Vec<BigInt>,
    denom: BigInt,
}

impl QuotaDigits {
    pub fn new(profile: FrequencyProfile) -> Self {
        let denom = profile
            .tau()
            .iter()
            .fold(BigInt::from(1), |acc, t| acc.lcm(t.denom()));
        let weights = profile
            .tau()
            .iter()
            .map(|t| t.numer() * (&denom / t.denom()))
            .collect();
        QuotaDigits {
            profile,
            weights,
            denom,
        }
    }

    pub fn profile(&self) -> &FrequencyProfile {
        &self.profile
    }
}

struct QuotaIter<'a> {
    source: &'a QuotaDigits,
    // (m·τ_i − N_i(m−1))·denom for the upcoming step m
    deficits: Vec<BigInt>,
}

impl Iterator for QuotaIter<'_> {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        for (d, w) in self.deficits.iter_mut().zip(&self.source.weights) {
            *d += w;
        }
        let mut best = 0;
        for i in 1..self.deficits.len() {
            if self.deficits[i] > self.deficits[best] {
                best = i;
            }
        }
        self.deficits[best] -= &self.source.denom;
        Some(best as u8)
    }
}

impl DigitStream for QuotaDigits {
    fn radix(&self) -> Radix {
        self.profile.radix()
    }

    fn digits(&self) -> Box<dyn Iterator<Item = u8> + '_> {
        Box::new(QuotaIter {
            source: self,
            deficits: vec![BigInt::from(0); self.weights.len()],
        })
    }
}

/// First `n` digits of [`QuotaDigits`].
pub fn quota_construct(profile: &FrequencyProfile, n: usize) -> Vec<u8> {
    QuotaDigits::new(profile.clone()).digits().take(n).collect()
}
