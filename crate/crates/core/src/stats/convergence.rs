//! Finite-depth verdicts on whether a sampled sequence settles.
//!
//! A limit cannot be decided from a finite prefix. The verdicts here are
//! evidence read off the tail of the samples, not proofs.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{from_int, ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConvergenceVerdict {
    /// The tail window fits inside a band of width `tolerance`; `value` is
    /// its midpoint and `depth` the last sample depth.
    Converged {
        value: Rational,
        depth: u64,
        tolerance: Rational,
    },
    /// The tail alternates between a low and a high level at least twice on
    /// each side. Estimates are the tail-window extremes.
    Oscillating {
        liminf_estimate: Rational,
        limsup_estimate: Rational,
        low_witnesses: Vec<u64>,
        high_witnesses: Vec<u64>,
    },
    Undetermined {
        depth: u64,
    },
}

impl ConvergenceVerdict {
    pub fn is_converged(&self) -> bool {
        matches!(self, ConvergenceVerdict::Converged { .. })
    }

    pub fn is_oscillating(&self) -> bool {
        matches!(self, ConvergenceVerdict::Oscillating { .. })
    }

    /// `limsup − liminf` for an oscillating verdict.
    pub fn spread(&self) -> Option<Rational> {
        match self {
            ConvergenceVerdict::Oscillating {
                liminf_estimate,
                limsup_estimate,
                ..
            } => Some(limsup_estimate - liminf_estimate),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifyConfig {
    pub gap: Rational,
    pub tail_fraction: Rational,
}

impl Default for ClassifyConfig {
    /// `gap = 1/1000`, `tail_fraction = 1/2`.
    fn default() -> Self {
        ClassifyConfig {
            gap: ratio(1, 1000),
            tail_fraction: ratio(1, 2),
        }
    }
}

impl ClassifyConfig {
    pub fn classify(&self, samples: &[(u64, Rational)]) -> Result<ConvergenceVerdict> {
        classify_limit(samples, &self.gap, &self.tail_fraction)
    }
}

/// Classifies the tail window (the last `tail_fraction` of the samples).
///
/// * spread `≤ gap` → [`ConvergenceVerdict::Converged`] at the midpoint;
/// * spread `> gap` and at least two alternating visits to each outer
///   quarter of the range → [`ConvergenceVerdict::Oscillating`];
/// * otherwise, or with fewer than four samples,
///   [`ConvergenceVerdict::Undetermined`].
pub fn classify_limit(
    samples: &[(u64, Rational)],
    gap: &Rational,
    tail_fraction: &Rational,
) -> Result<ConvergenceVerdict> {
    if *gap <= Rational::zero() {
        return Err(Error::domain("gap must be positive"));
    }
    if *tail_fraction <= Rational::zero() || *tail_fraction > Rational::one() {
        return Err(Error::domain("tail fraction must lie in (0, 1]"));
    }
    if samples.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err(Error::domain("sample depths must be strictly ascending"));
    }
    let last_depth = samples.last().map_or(0, |s| s.0);
    if samples.len() < 4 {
        return Ok(ConvergenceVerdict::Undetermined { depth: last_depth });
    }

    // ceil(len · tail_fraction), at least two samples
    let len = from_int(samples.len() as u64);
    let tail_len = (len * tail_fraction).ceil().to_integer();
    let tail_len = usize::try_from(tail_len)
        .unwrap_or(samples.len())
        .clamp(2, samples.len());
    let tail = &samples[samples.len() - tail_len..];

    let lo = tail.iter().map(|s| &s.1).min().unwrap().clone();
    let hi = tail.iter().map(|s| &s.1).max().unwrap().clone();
    let spread = &hi - &lo;
    if spread <= *gap {
        return Ok(ConvergenceVerdict::Converged {
            value: (&lo + &hi) / from_int(2),
            depth: last_depth,
            tolerance: gap.clone(),
        });
    }

    let quarter = &spread / from_int(4);
    let low_band = &lo + &quarter;
    let high_band = &hi - &quarter;
    #[derive(PartialEq)]
    enum Side {
        Low,
        High,
    }
    let mut side = None;
    let mut low_witnesses = Vec::new();
    let mut high_witnesses = Vec::new();
    for (depth, value) in tail {
        if *value <= low_band && side != Some(Side::Low) {
            low_witnesses.push(*depth);
            side = Some(Side::Low);
        } else if *value >= high_band && side != Some(Side::High) {
            high_witnesses.push(*depth);
            side = Some(Side::High);
        }
    }
    if low_witnesses.len() >= 2 && high_witnesses.len() >= 2 {
        Ok(ConvergenceVerdict::Oscillating {
            liminf_estimate: lo,
            limsup_estimate: hi,
            low_witnesses,
            high_witnesses,
        })
    } else {
        Ok(ConvergenceVerdict::Undetermined { depth: last_depth })
    }
}
