//! Seeded Monte Carlo trials of uniformly random digits.
//!
//! For almost every number all digit frequencies equal `1/s`, so the digit
//! mean is `(s−1)/2`. Each trial draws `n` i.i.d. uniform digits and records
//! `r_n`; a run reports how tightly the trials cluster around `(s−1)/2`.
//!
//! # Reproducibility
//!
//! * Trial `t` of a run with master seed `M` uses the seed
//!   `trial_seed(M, t) = mix64(M + mix64(t))` (wrapping add), where `mix64`
//!   is the SplitMix64 finaliser: add `0x9E3779B97F4A7C15`, then
//!   `z = (z ^ z>>30)·0xBF58476D1CE4E5B9`, `z = (z ^ z>>27)·0x94D049BB133111EB`,
//!   `z ^ z>>31`.
//! * That seed keys a ChaCha8 stream via `rand_core`'s `seed_from_u64`.
//! * A digit is `x mod s` for the first 64-bit output `x` below
//!   `⌊(2^64 − 1)/s⌋·s`; larger outputs are rejected, so there is no modulo bias.
//!
//! Trials never share state, so serial and parallel runs agree bit for bit.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::radix::Radix;
use crate::rational::{from_int, to_decimal_string, to_f64, to_fraction_string, Rational};
use crate::stats::{DigitCounter, PartialStats};

/// Recorded in every summary so results can be traced to the generator.
pub const RNG_ID: &str = "chacha8-seed_from_u64/splitmix64-trial-seed/reject-mod/v1";

/// SplitMix64 output function.
pub fn mix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn trial_seed(master_seed: u64, trial: u64) -> u64 {
    mix64(master_seed.wrapping_add(mix64(trial)))
}

/// Uniform digits from a seeded ChaCha8 stream.
pub struct UniformDigits {
    rng: ChaCha8Rng,
    radix: u64,
    limit: u64,
}

impl UniformDigits {
    pub fn new(radix: Radix, seed: u64) -> Self {
        let s = u64::from(radix.get());
        UniformDigits {
            rng: ChaCha8Rng::seed_from_u64(seed),
            radix: s,
            limit: (u64::MAX / s) * s,
        }
    }
}

impl Iterator for UniformDigits {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        loop {
            let x = self.rng.next_u64();
            if x < self.limit {
                return Some((x % self.radix) as u8);
            }
        }
    }
}

/// Statistics of `n` uniform digits drawn with `seed`.
pub fn uniform_digit_trial(radix: Radix, n: u64, seed: u64) -> PartialStats {
    let mut counter = DigitCounter::new(radix);
    for d in UniformDigits::new(radix, seed).take(n as usize) {
        counter.push(d);
    }
    counter.snapshot()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExperimentConfig {
    #[serde(rename = "base")]
    pub radix: Radix,
    /// Digits per trial.
    pub n: u64,
    pub trials: u64,
    pub master_seed: u64,
}

impl ExperimentConfig {
    pub fn new(radix: Radix, n: u64, trials: u64, master_seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("depth per trial must be at least 1"));
        }
        if trials == 0 {
            return Err(Error::domain("at least one trial is required"));
        }
        Ok(ExperimentConfig {
            radix,
            n,
            trials,
            master_seed,
        })
    }

    /// `(s−1)/2`
    pub fn expected_mean(&self) -> Rational {
        Rational::new((self.radix.get() - 1).into(), 2.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Serial,
    #[default]
    Parallel,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSummary {
    pub config: ExperimentConfig,
    pub band: Rational,
    /// `r_n` of each trial, in trial order.
    pub per_trial: Vec<Rational>,
    pub mean: Rational,
    /// Sample standard deviation (`n − 1` denominator); zero for one trial.
    pub stddev: f64,
    /// Share of trials with `|r_n − (s−1)/2| ≤ band`.
    pub fraction_in_band: Rational,
}

#[derive(Serialize)]
struct SummaryJson<'a> {
    config: &'a ExperimentConfig,
    rng_id: &'static str,
    band: String,
    per_trial: Vec<String>,
    mean: String,
    mean_exact: String,
    stddev: String,
    fraction_in_band: String,
}

impl ExperimentSummary {
    pub fn to_json(&self) -> serde_json::Value {
        let dec = |x: &Rational| to_decimal_string(x, 20);
        serde_json::to_value(SummaryJson {
            config: &self.config,
            rng_id: RNG_ID,
            band: dec(&self.band),
            per_trial: self.per_trial.iter().map(dec).collect(),
            mean: dec(&self.mean),
            mean_exact: to_fraction_string(&self.mean),
            stddev: format!("{:.17e}", self.stddev),
            fraction_in_band: dec(&self.fraction_in_band),
        })
        .expect("summary serialises")
    }
}

/// Runs `cfg.trials` independent trials in parallel.
pub fn normality_experiment(cfg: &ExperimentConfig, band: &Rational) -> Result<ExperimentSummary> {
    normality_experiment_with(cfg, band, Execution::Parallel)
}

pub fn normality_experiment_with(
    cfg: &ExperimentConfig,
    band: &Rational,
    execution: Execution,
) -> Result<ExperimentSummary> {
    if band.is_negative() {
        return Err(Error::domain("band must be non-negative"));
    }
    let trial =
        |t: u64| uniform_digit_trial(cfg.radix, cfg.n, trial_seed(cfg.master_seed, t)).mean();
    let per_trial: Vec<Rational> = match execution {
        Execution::Serial => (0..cfg.trials).map(trial).collect(),
        Execution::Parallel => (0..cfg.trials).into_par_iter().map(trial).collect(),
    };

    let count = from_int(cfg.trials);
    let mean = per_trial.iter().sum::<Rational>() / &count;
    let stddev = if cfg.trials > 1 {
        let ss: Rational = per_trial.iter().map(|r| (r - &mean) * (r - &mean)).sum();
        to_f64(&(ss / from_int(cfg.trials - 1))).sqrt()
    } else {
        0.0
    };
    let target = cfg.expected_mean();
    let inside = per_trial
        .iter()
        .filter(|r| (*r - &target).abs() <= *band)
        .count() as u64;
    Ok(ExperimentSummary {
        config: *cfg,
        band: band.clone(),
        per_trial,
        mean,
        stddev,
        fraction_in_band: Rational::new(inside.into(), cfg.trials.into()),
    })
}
