use crate::error::{Error, Result};
use crate::radix::Radix;
use crate::rational::{from_int, Rational};
use crate::stream::DigitStream;

/// Digit counts after the first `n` digits of a stream.
///
/// The digit sum is accumulated independently of the counts, so
/// [`PartialStats::mean`] (`Σ α_j / n`) and
/// [`PartialStats::mean_from_counts`] (`Σ i·N_i / n`) are two routes to the
/// same number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialStats {
    radix: Radix,
    n: u64,
    counts: Vec<u64>,
    digit_sum: u64,
}

impl PartialStats {
    pub fn radix(&self) -> Radix {
        self.radix
    }

    /// Depth: number of digits consumed.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `N_i` for every digit `i`.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, digit: u8) -> u64 {
        self.counts[digit as usize]
    }

    pub fn digit_sum(&self) -> u64 {
        self.digit_sum
    }

    /// Relative frequency `N_i / n`. Zero at depth zero.
    pub fn freq(&self, digit: u8) -> Rational {
        ratio_or_zero(self.count(digit), self.n)
    }

    pub fn freqs(&self) -> Vec<Rational> {
        (0..self.counts.len() as u8).map(|d| self.freq(d)).collect()
    }

    /// Relative mean `r_n = (α_1 + … + α_n) / n`.
    pub fn mean(&self) -> Rational {
        ratio_or_zero(self.digit_sum, self.n)
    }

    /// `Σ_{i≥1} i·v_i`, computed from the frequencies.
    pub fn mean_from_counts(&self) -> Rational {
        self.freqs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, v)| from_int(i as u64) * v)
            .sum()
    }
}

fn ratio_or_zero(num: u64, den: u64) -> Rational {
    if den == 0 {
        from_int(0)
    } else {
        Rational::new(num.into(), den.into())
    }
}

/// Single-pass accumulator behind [`running_stats`].
#[derive(Debug, Clone)]
pub struct DigitCounter {
    radix: Radix,
    n: u64,
    counts: Vec<u64>,
    digit_sum: u64,
}

impl DigitCounter {
    pub fn new(radix: Radix) -> Self {
        DigitCounter {
            radix,
            n: 0,
            counts: vec![0; radix.get() as usize],
            digit_sum: 0,
        }
    }

    #[inline]
    pub fn push(&mut self, digit: u8) {
        debug_assert!(self.radix.contains(digit));
        self.n += 1;
        self.counts[digit as usize] += 1;
        self.digit_sum += u64::from(digit);
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn count(&self, digit: u8) -> u64 {
        self.counts[digit as usize]
    }

    pub fn snapshot(&self) -> PartialStats {
        PartialStats {
            radix: self.radix,
            n: self.n,
            counts: self.counts.clone(),
            digit_sum: self.digit_sum,
        }
    }
}

/// Result of [`running_stats`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunningStats {
    pub rows: Vec<PartialStats>,
    /// The stream ended before the last checkpoint. The final row then
    /// reports the stream's actual length.
    pub truncated: bool,
}

/// Statistics at each checkpoint depth, in one pass over the stream.
///
/// Checkpoints must be non-empty, strictly ascending and at least 1.
pub fn running_stats<S: DigitStream + ?Sized>(
    stream: &S,
    checkpoints: &[u64],
) -> Result<RunningStats> {
    validate_checkpoints(checkpoints)?;
    let radix = stream.radix();
    let mut counter = DigitCounter::new(radix);
    let mut rows = Vec::with_capacity(checkpoints.len());
    let mut digits = stream.digits();
    for &target in checkpoints {
        while counter.n() < target {
            match digits.next() {
                Some(d) => {
                    radix.check(d)?;
                    counter.push(d);
                }
                None => {
                    if counter.n() > 0
                        && rows.last().is_none_or(|r: &PartialStats| r.n < counter.n())
                    {
                        rows.push(counter.snapshot());
                    }
                    return Ok(RunningStats {
                        rows,
                        truncated: true,
                    });
                }
            }
        }
        rows.push(counter.snapshot());
    }
    Ok(RunningStats {
        rows,
        truncated: false,
    })
}

pub(crate) fn validate_checkpoints(checkpoints: &[u64]) -> Result<()> {
    if checkpoints.is_empty() {
        return Err(Error::domain("at least one checkpoint is required"));
    }
    if checkpoints[0] == 0 {
        return Err(Error::domain("checkpoints must be at least 1"));
    }
    if checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain("checkpoints must be strictly ascending"));
    }
    Ok(())
}
