//! Preassigned zero frequency through Beatty indicators.
//!
//! With `c_n = [n·a]`, the indicator `d_n = c_{n+1} − c_n` is 1 exactly
//! `[n·a]`-many times among the first `n` steps (up to a unit). Writing a 0
//! whenever `d_n = 1` therefore pins the zero frequency to `a`. The other
//! positions get 1 or 2 from a second indicator `d'_n` built from `b`.
//!
//! The rule does not control the split between 1s and 2s: when both
//! indicators fire at the same step the zero wins and the `b`-event is lost.
//! [`crate::constructors::quota_construct`] is the generator to use when the
//! whole profile must be hit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::radix::Radix;
use crate::rational::{floor_mul, to_fraction_string, Rational};
use crate::stream::DigitStream;

/// `d_n = [(n+1)·a] − [n·a]` for `a ∈ [0, 1]`, `n ≥ 1`.
///
/// # Panics
/// If `a` is outside `[0, 1]` or `n == 0`.
pub fn beatty_indicator(a: &Rational, n: u64) -> u8 {
    assert!(n >= 1, "indicator index starts at 1");
    assert!(
        !a.is_negative() && *a <= Rational::one(),
        "a must lie in [0, 1]"
    );
    let d = floor_mul(n + 1, a) - floor_mul(n, a);
    d.to_u8().expect("indicator is 0 or 1")
}

/// The indicator sequence `d_1, d_2, …` for a fixed `a`, computed
/// incrementally from `n·a mod 1`.
#[derive(Debug, Clone)]
pub struct BeattyIndicators {
    numer: BigInt,
    denom: BigInt,
    // n·numer mod denom for the next index n
    rem: BigInt,
}

impl BeattyIndicators {
    pub fn new(a: &Rational) -> Result<Self> {
        check_unit(a, "a")?;
        let numer = a.numer().clone();
        let denom = a.denom().clone();
        let rem = numer.mod_floor(&denom);
        Ok(BeattyIndicators { numer, denom, rem })
    }
}

impl Iterator for BeattyIndicators {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        let next = &self.rem + &self.numer;
        let (d, r) = next.div_mod_floor(&self.denom);
        self.rem = r;
        Some(d.to_u8().expect("indicator is 0 or 1"))
    }
}

fn check_unit(x: &Rational, name: &str) -> Result<()> {
    if x.is_negative() || *x > Rational::one() {
        return Err(Error::domain(format!(
            "{name} = {} is not in [0, 1]",
            to_fraction_string(x)
        )));
    }
    Ok(())
}

/// The ternary digit rule: position `n` holds 0 if `d_n = 1`, otherwise 1
/// if `d'_n = 0` and 2 if `d'_n = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeattyRule {
    a: Rational,
    b: Rational,
}

impl BeattyRule {
    /// Requires `a, b ≥ 0` and `a + b ≤ 1`.
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        check_unit(&a, "a")?;
        check_unit(&b, "b")?;
        if &a + &b > Rational::one() {
            return Err(Error::domain(format!(
                "a + b = {} exceeds 1",
                to_fraction_string(&(&a + &b))
            )));
        }
        Ok(BeattyRule { a, b })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }
}

impl DigitStream for BeattyRule {
    fn radix(&self) -> Radix {
        Radix::TERNARY
    }

    fn digits(&self) -> Box<dyn Iterator<Item = u8> + '_> {
        let zeros = BeattyIndicators::new(&self.a).expect("validated");
        let ones = BeattyIndicators::new(&self.b).expect("validated");
        Box::new(zeros.zip(ones).map(|(d, d2)| match (d, d2) {
            (1, _) => 0,
            (_, 0) => 1,
            _ => 2,
        }))
    }
}

/// First `n` digits of [`BeattyRule`].
pub fn beatty_construct_section3(a: &Rational, b: &Rational, n: usize) -> Result<Vec<u8>> {
    let rule = BeattyRule::new(a.clone(), b.clone())?;
    Ok(rule.digits().take(n).collect())
}
