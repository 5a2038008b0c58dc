//! Constructions of digit sequences with prescribed statistics.

mod beatty;
mod blocks;
mod floor_average;
mod no_mean;
mod quota;
mod schedule;

pub use beatty::{beatty_construct_section3, beatty_indicator, BeattyIndicators, BeattyRule};
pub use blocks::{
    construct_mean_without_frequency, first_zero_run_difference, validate_theta, BlockEstimates,
    BlockRow, BlockSpec, BlockStream,
};
pub use floor_average::{floor_average_bounds, floor_weighted_average};
pub use no_mean::{no_mean_example, NoMeanExample};
pub use quota::{quota_construct, QuotaDigits};
pub use schedule::{build_oscillating_schedule, Level, OscillationSchedule, ScheduleRun};
