//! Two-level sequences whose floor-weighted average oscillates.
//!
//! The sequence `α̃_n` takes the value `x1` until the running average
//!
//! ```text
//! w_n = ([1·α̃_1] + [2·α̃_2] + … + [n·α̃_n]) / (n(n+1)/2)
//! ```
//!
//! first drops below `x1 + ε`, then `x2` until `w_n` first exceeds `x2 − ε`,
//! and so on. Because a constant tail drives `w_n` to that constant, each
//! switch point exists, and `w_n` never settles.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{floor_mul, to_fraction_string, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Level {
    /// `x1`
    Low,
    /// `x2`
    High,
}

impl Level {
    fn flip(self) -> Level {
        match self {
            Level::Low => Level::High,
            Level::High => Level::Low,
        }
    }
}

/// A maximal run `start..=end` on which `α̃` is constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScheduleRun {
    pub start: u64,
    pub end: u64,
    pub level: Level,
    /// `end` is a breakpoint; false only for the run cut by the horizon.
    pub complete: bool,
    /// `w_end`
    pub w_end: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OscillationSchedule {
    x1: Rational,
    x2: Rational,
    epsilon: Rational,
    horizon: u64,
    runs: Vec<ScheduleRun>,
}

/// Builds `α̃_1, …, α̃_horizon` by exact sequential search for each
/// breakpoint.
///
/// Requires `0 < x1 < x2` and `0 < ε < (x2 − x1)/2`.
pub fn build_oscillating_schedule(
    x1: &Rational,
    x2: &Rational,
    epsilon: &Rational,
    horizon: u64,
) -> Result<OscillationSchedule> {
    if !x1.is_positive() || x1 >= x2 {
        return Err(Error::domain(format!(
            "need 0 < x1 < x2, got x1 = {}, x2 = {}",
            to_fraction_string(x1),
            to_fraction_string(x2)
        )));
    }
    if !epsilon.is_positive() || epsilon * Rational::from_integer(2.into()) >= x2 - x1 {
        return Err(Error::domain(format!(
            "need 0 < eps < (x2 - x1)/2, got eps = {}",
            to_fraction_string(epsilon)
        )));
    }
    let low_target = x1 + epsilon;
    let high_target = x2 - epsilon;

    let mut runs = Vec::new();
    let mut level = Level::Low;
    let mut start = 1;
    // 2·Σ_{j≤n} [j·α̃_j]
    let mut twice_sum = BigInt::zero();
    for n in 1..=horizon {
        let value = if level == Level::Low { x1 } else { x2 };
        twice_sum += floor_mul(n, value) * 2;
        let nn = BigInt::from(n) * BigInt::from(n + 1);
        // w_n < t  ⇔  2S·q < p·n(n+1)  for t = p/q
        let reached = match level {
            Level::Low => &twice_sum * low_target.denom() < low_target.numer() * &nn,
            Level::High => &twice_sum * high_target.denom() > high_target.numer() * &nn,
        };
        if reached || n == horizon {
            runs.push(ScheduleRun {
                start,
                end: n,
                level,
                complete: reached,
                w_end: Rational::new(twice_sum.clone(), nn),
            });
            level = level.flip();
            start = n + 1;
        }
    }
    Ok(OscillationSchedule {
        x1: x1.clone(),
        x2: x2.clone(),
        epsilon: epsilon.clone(),
        horizon,
        runs,
    })
}

impl OscillationSchedule {
    pub fn x1(&self) -> &Rational {
        &self.x1
    }

    pub fn x2(&self) -> &Rational {
        &self.x2
    }

    pub fn epsilon(&self) -> &Rational {
        &self.epsilon
    }

    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    pub fn runs(&self) -> &[ScheduleRun] {
        &self.runs
    }

    /// `n_1 < n_2 < …`, the ends of complete runs.
    pub fn breakpoints(&self) -> Vec<u64> {
        self.complete_runs().map(|r| r.end).collect()
    }

    /// `(n_k, w_{n_k})` for every breakpoint.
    pub fn breakpoint_averages(&self) -> Vec<(u64, Rational)> {
        self.complete_runs()
            .map(|r| (r.end, r.w_end.clone()))
            .collect()
    }

    fn complete_runs(&self) -> impl Iterator<Item = &ScheduleRun> {
        self.runs.iter().filter(|r| r.complete)
    }

    pub fn level_value(&self, level: Level) -> &Rational {
        match level {
            Level::Low => &self.x1,
            Level::High => &self.x2,
        }
    }

    /// `α̃_n` for `1 ≤ n ≤ horizon`.
    pub fn value(&self, n: u64) -> Option<&Rational> {
        if n == 0 || n > self.horizon {
            return None;
        }
        let idx = self.runs.partition_point(|r| r.end < n);
        Some(self.level_value(self.runs[idx].level))
    }

    /// `α̃_1, …, α̃_horizon`.
    pub fn values(&self) -> impl Iterator<Item = &Rational> + '_ {
        self.runs.iter().flat_map(move |r| {
            std::iter::repeat_n(self.level_value(r.level), (r.end - r.start + 1) as usize)
        })
    }
}
