//! Running digit statistics and the frequency/mean algebra.

mod checkpoints;
mod convergence;
mod frequency;
mod partial;

pub use checkpoints::{geometric_checkpoints, merge_checkpoints};
pub use convergence::{classify_limit, ClassifyConfig, ConvergenceVerdict};
pub use frequency::{
    exact_frequencies_rational, mean_from_frequencies, solve_ternary_system, FrequencyProfile,
};
pub use partial::{running_stats, DigitCounter, PartialStats, RunningStats};
