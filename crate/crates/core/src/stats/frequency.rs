use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::expansion::RadixExpansion;
use crate::radix::Radix;
use crate::rational::{from_int, to_fraction_string, Rational};

/// A frequency vector `(τ_0, …, τ_{s−1})` with `τ_i ≥ 0` and `Σ τ_i = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyProfile {
    radix: Radix,
    tau: Vec<Rational>,
}

impl FrequencyProfile {
    /// The radix is the length of `tau`.
    pub fn new(tau: Vec<Rational>) -> Result<Self> {
        let radix = Radix::new(tau.len() as u32)?;
        if let Some(t) = tau.iter().find(|t| t.is_negative()) {
            return Err(Error::domain(format!(
                "frequency {} is negative",
                to_fraction_string(t)
            )));
        }
        let total: Rational = tau.iter().sum();
        if !total.is_one() {
            return Err(Error::domain(format!(
                "frequencies sum to {}, not 1",
                to_fraction_string(&total)
            )));
        }
        Ok(FrequencyProfile { radix, tau })
    }

    /// `(1/s, …, 1/s)`.
    pub fn uniform(radix: Radix) -> Self {
        let s = radix.get() as i64;
        FrequencyProfile {
            radix,
            tau: vec![crate::rational::ratio(1, s); s as usize],
        }
    }

    pub fn radix(&self) -> Radix {
        self.radix
    }

    pub fn tau(&self) -> &[Rational] {
        &self.tau
    }

    /// The derived mean `θ = Σ i·τ_i`.
    pub fn theta(&self) -> Rational {
        mean_from_frequencies(self)
    }
}

/// `Σ_{i=1}^{s−1} i·τ_i`, exactly. Always lands in `[0, s−1]`.
pub fn mean_from_frequencies(f: &FrequencyProfile) -> Rational {
    f.tau
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, t)| from_int(i as u64) * t)
        .sum()
}

/// Frequencies of a rational's digits: the digit shares of its period.
pub fn exact_frequencies_rational(e: &RadixExpansion) -> FrequencyProfile {
    let s = e.radix().get() as usize;
    let len = e.period().len() as i64;
    let mut counts = vec![0i64; s];
    for &d in e.period() {
        counts[d as usize] += 1;
    }
    FrequencyProfile {
        radix: e.radix(),
        tau: counts
            .into_iter()
            .map(|c| Rational::new(c.into(), len.into()))
            .collect(),
    }
}

/// Solves the ternary system `v0 + v1 + v2 = 1`, `v1 + 2·v2 = r` for
/// `(v1, v2)`:
///
/// ```text
/// v2 = r − 1 + v0
/// v1 = 2 − 2·v0 − r
/// ```
///
/// Requires `0 ≤ v0 ≤ 1` and `0 ≤ r ≤ 2`; returns [`Error::Infeasible`] when
/// the solution leaves `[0, 1]`.
pub fn solve_ternary_system(v0: &Rational, r: &Rational) -> Result<(Rational, Rational)> {
    let zero = Rational::zero();
    let one = Rational::one();
    let two = from_int(2);
    if *v0 < zero || *v0 > one {
        return Err(Error::domain(format!(
            "v0 = {} is not in [0, 1]",
            to_fraction_string(v0)
        )));
    }
    if *r < zero || *r > two {
        return Err(Error::domain(format!(
            "r = {} is not in [0, 2]",
            to_fraction_string(r)
        )));
    }
    let v2 = r - &one + v0;
    let v1 = &two - &two * v0 - r;
    let in_unit = |v: &Rational| *v >= zero && *v <= one;
    if !in_unit(&v1) || !in_unit(&v2) {
        return Err(Error::Infeasible(format!(
            "no frequency vector has v0 = {} and mean {}: v1 = {}, v2 = {}",
            to_fraction_string(v0),
            to_fraction_string(r),
            to_fraction_string(&v1),
            to_fraction_string(&v2)
        )));
    }
    Ok((v1, v2))
}
