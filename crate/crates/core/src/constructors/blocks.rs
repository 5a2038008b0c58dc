//! A ternary number whose digit mean converges while no digit frequency
//! exists.
//!
//! Block `k` is `[k·α_k]` zeros, then `[k·β_k]` ones, then `[k·γ_k]` twos,
//! where `α_k` follows an [`OscillationSchedule`] between `x1` and `x2` and
//!
//! ```text
//! β_k = 2 − 2·α_k − θ,   γ_k = α_k − 1 + θ.
//! ```
//!
//! Each block then has mean digit close to `θ` (`β + 2γ = θ`) while its share
//! of zeros swings with `α_k`, so `ν_0` fails to exist.

use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::radix::Radix;
use crate::rational::{floor_mul_u64, from_int, to_fraction_string, Rational};
use crate::stream::DigitStream;

use super::schedule::{build_oscillating_schedule, OscillationSchedule};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockRow {
    pub k: u64,
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    /// `[k·α_k]`
    pub zeros: u64,
    /// `[k·β_k]`
    pub ones: u64,
    /// `[k·γ_k]`
    pub twos: u64,
}

impl BlockRow {
    pub fn len(&self) -> u64 {
        self.zeros + self.ones + self.twos
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `u_k`: digit sum of the block.
    pub fn digit_sum(&self) -> u64 {
        self.ones + 2 * self.twos
    }
}

/// The run-length matrix `‖a_kj‖` together with the schedule that drives it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSpec {
    theta: Rational,
    schedule: OscillationSchedule,
    rows: Vec<BlockRow>,
}

/// Prefix sums before block `k` and the block's own contribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockEstimates {
    pub k: u64,
    /// `A_k`: digit sum of blocks `1..k−1`.
    pub a_sum: u64,
    /// `B_k`: digit count of blocks `1..k−1`.
    pub b_len: u64,
    /// `u_k`
    pub block_sum: u64,
    /// `v_k`
    pub block_len: u64,
}

impl BlockEstimates {
    /// `θ·(k−1)k/2 − 3(k−1) < A_k ≤ θ·(k−1)k/2`. For `k = 1` both sides
    /// collapse to zero and only `A_1 = 0` is checked.
    pub fn a_sandwich_holds(&self, theta: &Rational) -> bool {
        let tri = triangular(self.k);
        let upper = theta * &tri;
        let a = from_int(self.a_sum);
        if self.k == 1 {
            return a.is_zero();
        }
        let lower = &upper - from_int(3 * (self.k - 1));
        lower < a && a <= upper
    }

    /// `(k−1)k/2 − 3(k−1) < B_k ≤ (k−1)k/2`, degenerate at `k = 1`.
    pub fn b_sandwich_holds(&self) -> bool {
        let tri = triangular(self.k);
        let b = from_int(self.b_len);
        if self.k == 1 {
            return b.is_zero();
        }
        let lower = &tri - from_int(3 * (self.k - 1));
        lower < b && b <= tri
    }

    /// `0 ≤ u_k ≤ k·θ` and `0 ≤ v_k ≤ k`.
    pub fn block_bounds_hold(&self, theta: &Rational) -> bool {
        from_int(self.block_sum) <= from_int(self.k) * theta && self.block_len <= self.k
    }
}

fn triangular(k: u64) -> Rational {
    Rational::new((k * (k - 1)).into(), 2.into())
}

impl BlockSpec {
    pub fn theta(&self) -> &Rational {
        &self.theta
    }

    pub fn schedule(&self) -> &OscillationSchedule {
        &self.schedule
    }

    pub fn rows(&self) -> &[BlockRow] {
        &self.rows
    }

    /// Rows where `α+β+γ = 1` or `β+2γ = θ` fails. Empty for every spec built
    /// by [`construct_mean_without_frequency`].
    pub fn identity_violations(&self) -> Vec<u64> {
        let one = Rational::one();
        self.rows
            .iter()
            .filter(|r| {
                &r.alpha + &r.beta + &r.gamma != one
                    || &r.beta + from_int(2) * &r.gamma != self.theta
            })
            .map(|r| r.k)
            .collect()
    }

    /// [`BlockEstimates`] for `k = 1..=K`.
    pub fn estimates(&self) -> Vec<BlockEstimates> {
        let mut a_sum = 0;
        let mut b_len = 0;
        self.rows
            .iter()
            .map(|r| {
                let e = BlockEstimates {
                    k: r.k,
                    a_sum,
                    b_len,
                    block_sum: r.digit_sum(),
                    block_len: r.len(),
                };
                a_sum += r.digit_sum();
                b_len += r.len();
                e
            })
            .collect()
    }

    /// Stream depth at the end of each block.
    pub fn block_ends(&self) -> Vec<u64> {
        self.rows
            .iter()
            .scan(0, |acc, r| {
                *acc += r.len();
                Some(*acc)
            })
            .collect()
    }

    pub fn total_len(&self) -> u64 {
        self.rows.iter().map(BlockRow::len).sum()
    }

    /// CSV with header `k,a_k1,a_k2,a_k3,alpha_k`; `alpha_k` as `p/q`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,a_k1,a_k2,a_k3,alpha_k\n");
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{}",
                r.k,
                r.zeros,
                r.ones,
                r.twos,
                to_fraction_string(&r.alpha)
            )
            .unwrap();
        }
        out
    }
}

/// The digits of a [`BlockSpec`], generated block by block on demand.
#[derive(Debug, Clone)]
pub struct BlockStream {
    runs: Arc<[[u64; 3]]>,
}

impl BlockStream {
    pub fn new(spec: &BlockSpec) -> Self {
        BlockStream {
            runs: spec
                .rows
                .iter()
                .map(|r| [r.zeros, r.ones, r.twos])
                .collect(),
        }
    }
}

impl DigitStream for BlockStream {
    fn radix(&self) -> Radix {
        Radix::TERNARY
    }

    fn digits(&self) -> Box<dyn Iterator<Item = u8> + '_> {
        Box::new(self.runs.iter().flat_map(|run| {
            run.iter()
                .enumerate()
                .flat_map(|(digit, &len)| std::iter::repeat_n(digit as u8, len as usize))
        }))
    }
}

/// Checks that a digit mean `θ` admits a number without digit frequencies.
///
/// * `θ = 0` or `θ = 2` → [`Error::Infeasible`]: a mean at either end of
///   `[0, 2]` forces every frequency to exist.
/// * `θ` outside `[0, 2]` → [`Error::Domain`].
pub fn validate_theta(theta: &Rational) -> Result<()> {
    let two = from_int(2);
    if theta.is_zero() || *theta == two {
        return Err(Error::Infeasible(format!(
            "theta = {} admits no number without digit frequencies: \
             the construction needs 0 < theta < 2 (a mean of 0 or 2 forces every frequency to exist)",
            to_fraction_string(theta)
        )));
    }
    if theta.is_negative() || *theta > two {
        return Err(Error::domain(format!(
            "theta = {} is outside (0, 2)",
            to_fraction_string(theta)
        )));
    }
    Ok(())
}

/// Builds blocks `1..=blocks` for mean `θ` with the zero share switching
/// between `x1` and `x2`.
///
/// * `θ` is checked by [`validate_theta`].
/// * `x1, x2` must satisfy `max(0, 1−θ) < x1 < x2 < (2−θ)/2` so that
///   `α, β, γ` are all positive; and `0 < ε < (x2 − x1)/2`.
pub fn construct_mean_without_frequency(
    theta: &Rational,
    x1: &Rational,
    x2: &Rational,
    epsilon: &Rational,
    blocks: u64,
) -> Result<(BlockSpec, BlockStream)> {
    validate_theta(theta)?;
    let two = from_int(2);
    let one = Rational::one();
    let lower = std::cmp::max(Rational::zero(), &one - theta);
    let upper = (&two - theta) / &two;
    for (name, x) in [("x1", x1), ("x2", x2)] {
        if *x <= lower || *x >= upper {
            return Err(Error::domain(format!(
                "{name} = {} must lie strictly between {} and {}",
                to_fraction_string(x),
                to_fraction_string(&lower),
                to_fraction_string(&upper)
            )));
        }
    }
    if blocks == 0 {
        return Err(Error::domain("at least one block is required"));
    }
    let schedule = build_oscillating_schedule(x1, x2, epsilon, blocks)?;
    let rows = schedule
        .values()
        .zip(1u64..)
        .map(|(alpha, k)| {
            let beta = &two - &two * alpha - theta;
            let gamma = alpha - &one + theta;
            let floor = |x: &Rational| floor_mul_u64(k, x).expect("run lengths are non-negative");
            BlockRow {
                k,
                zeros: floor(alpha),
                ones: floor(&beta),
                twos: floor(&gamma),
                alpha: alpha.clone(),
                beta,
                gamma,
            }
        })
        .collect();
    let spec = BlockSpec {
        theta: theta.clone(),
        schedule,
        rows,
    };
    let stream = BlockStream::new(&spec);
    Ok((spec, stream))
}

/// First block index at which the two constructions emit zero-runs of
/// different length.
pub fn first_zero_run_difference(a: &BlockSpec, b: &BlockSpec) -> Option<u64> {
    a.rows
        .iter()
        .zip(&b.rows)
        .find(|(x, y)| x.zeros != y.zeros)
        .map(|(x, _)| x.k)
}
