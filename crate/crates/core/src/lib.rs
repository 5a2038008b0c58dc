//! Exact digit statistics of numbers in `[0, 1)` and constructions of
//! numbers with prescribed digit means and frequencies.
//!
//! For `x = Σ α_k s^{-k}` with digits `α_k ∈ {0, …, s−1}`, the crate tracks
//! the digit counts `N_i(x, n)`, the relative frequencies `N_i/n` and the
//! running mean `r_n = (α_1 + … + α_n)/n`, all as exact rationals.
//!
//! * [`expansion`]: canonical eventually periodic expansions of rationals.
//! * [`stream`]: replayable digit sources and prefixing.
//! * [`stats`]: running statistics, the frequency/mean algebra and
//!   finite-depth convergence verdicts.
//! * [`constructors`]: numbers with prescribed frequencies, floor averages,
//!   oscillating schedules, a number with a digit mean but no frequencies and
//!   a number with no digit mean.
//! * [`simulation`]: seeded Monte Carlo checks on random digits.
//! * [`report`]: CSV/JSON output.
//!
//! ```
//! use radixstat::{expand_fraction, running_stats, ratio, Radix};
//!
//! let e = expand_fraction(1, 4, Radix::TERNARY).unwrap();
//! assert_eq!(e.to_string(), "0.(02)_3");
//! let rows = running_stats(&e, &[10]).unwrap().rows;
//! assert_eq!(rows[0].mean(), ratio(1, 1));
//! ```

pub mod constructors;
pub mod error;
pub mod expansion;
pub mod radix;
pub mod rational;
pub mod report;
pub mod simulation;
pub mod stats;
pub mod stream;

pub use error::{Error, Result};
pub use expansion::{expand, expand_fraction, expand_rational, RadixExpansion};
pub use radix::Radix;
pub use rational::{parse_rational, ratio, Rational};
pub use stats::{
    classify_limit, exact_frequencies_rational, mean_from_frequencies, running_stats,
    solve_ternary_system, ConvergenceVerdict, FrequencyProfile, PartialStats, RunningStats,
};
pub use stream::{with_prefix, Constant, DigitStream, FiniteDigits, Prefixed};
