//! Exact eventually periodic expansions of rationals in `[0, 1)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::radix::Radix;
use crate::rational::Rational;
use crate::stream::DigitStream;

/// `0.<preperiod>(<period>)` in base `radix`.
///
/// Always canonical: the period is primitive, never `(s−1)`, and the
/// preperiod is as short as possible. Terminating expansions carry the
/// period `[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RadixExpansion {
    radix: Radix,
    preperiod: Vec<u8>,
    period: Vec<u8>,
}

impl RadixExpansion {
    /// Validates and wraps raw parts. Non-canonical input is rejected rather
    /// than normalised.
    pub fn from_parts(radix: Radix, preperiod: Vec<u8>, period: Vec<u8>) -> Result<Self> {
        for &d in preperiod.iter().chain(&period) {
            radix.check(d)?;
        }
        if period.is_empty() {
            return Err(Error::domain("period must be non-empty"));
        }
        if period.iter().all(|&d| d == radix.max_digit()) {
            return Err(Error::domain(format!(
                "period ({}) is the non-canonical twin of a terminating expansion",
                radix.digit_char(radix.max_digit())
            )));
        }
        if !is_primitive(&period) {
            return Err(Error::domain("period is a repetition of a shorter word"));
        }
        if preperiod
            .last()
            .is_some_and(|d| d == period.last().unwrap())
        {
            return Err(Error::domain(
                "preperiod suffix can be absorbed into the period",
            ));
        }
        Ok(RadixExpansion {
            radix,
            preperiod,
            period,
        })
    }

    pub fn radix(&self) -> Radix {
        self.radix
    }

    pub fn preperiod(&self) -> &[u8] {
        &self.preperiod
    }

    pub fn period(&self) -> &[u8] {
        &self.period
    }

    pub fn is_terminating(&self) -> bool {
        self.period == [0]
    }

    /// First `n` digits.
    pub fn take_digits(&self, n: usize) -> Vec<u8> {
        self.digits().take(n).collect()
    }

    /// Exact value: preperiod sum plus the geometric tail of the period.
    pub fn evaluate(&self) -> Rational {
        let s = BigInt::from(self.radix.get());
        let pre = digits_value(&s, &self.preperiod);
        let per = digits_value(&s, &self.period);
        let pre_scale = num_traits::pow(s.clone(), self.preperiod.len());
        let cycle = num_traits::pow(s, self.period.len()) - BigInt::one();
        // pre/s^L + per/((s^m − 1)·s^L)
        Rational::new(pre * &cycle + per, cycle * pre_scale)
    }
}

fn digits_value(s: &BigInt, digits: &[u8]) -> BigInt {
    digits
        .iter()
        .fold(BigInt::zero(), |acc, &d| acc * s + BigInt::from(d))
}

fn is_primitive(word: &[u8]) -> bool {
    let n = word.len();
    (1..n)
        .filter(|d| n.is_multiple_of(*d))
        .all(|d| word.chunks(d).any(|c| c != &word[..d]))
}

/// Long division of `p/q` in base `s`, stopping at the first repeated
/// remainder.
///
/// Accepts `0 ≤ p/q < 1`; the fraction need not be reduced. The endpoint `1`
/// is rejected because its only expansion starting with `0.` is the
/// non-canonical `0.(s−1)`.
pub fn expand_rational(p: &BigInt, q: &BigInt, radix: Radix) -> Result<RadixExpansion> {
    if !q.is_positive() {
        return Err(Error::domain("denominator must be positive"));
    }
    if p.is_negative() || p >= q {
        return Err(Error::domain(format!(
            "{p}/{q} is outside [0, 1); only numbers in [0, 1) have a canonical expansion"
        )));
    }
    let g = p.gcd(q);
    let q = (q / &g).to_biguint().unwrap();
    let mut rem = (p / &g).to_biguint().unwrap();
    let s = BigUint::from(radix.get());

    let mut seen: HashMap<BigUint, usize> = HashMap::new();
    let mut digits = Vec::new();
    let start = loop {
        if let Some(&pos) = seen.get(&rem) {
            break pos;
        }
        seen.insert(rem.clone(), digits.len());
        let (d, r) = (&rem * &s).div_rem(&q);
        digits.push(d.to_u8().expect("digit below radix"));
        rem = r;
    };
    let period = digits.split_off(start);
    Ok(RadixExpansion {
        radix,
        preperiod: digits,
        period,
    })
}

/// Convenience wrapper over machine integers.
pub fn expand_fraction(p: u64, q: u64, radix: Radix) -> Result<RadixExpansion> {
    expand_rational(&BigInt::from(p), &BigInt::from(q), radix)
}

/// Expansion of an exact rational in `[0, 1)`.
pub fn expand(x: &Rational, radix: Radix) -> Result<RadixExpansion> {
    expand_rational(x.numer(), x.denom(), radix)
}

impl DigitStream for RadixExpansion {
    fn radix(&self) -> Radix {
        self.radix
    }

    fn digits(&self) -> Box<dyn Iterator<Item = u8> + '_> {
        Box::new(
            self.preperiod
                .iter()
                .copied()
                .chain(self.period.iter().copied().cycle()),
        )
    }
}

/// `0.<preperiod>(<period>)_<s>`, e.g. `0.2(1)_3`.
impl fmt::Display for RadixExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.radix;
        f.write_str("0.")?;
        for &d in &self.preperiod {
            write!(f, "{}", r.digit_char(d))?;
        }
        f.write_str("(")?;
        for &d in &self.period {
            write!(f, "{}", r.digit_char(d))?;
        }
        write!(f, ")_{}", r)
    }
}

impl FromStr for RadixExpansion {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let bad = |why: &str| Error::parse(input, why);
        let body = input
            .trim()
            .strip_prefix("0.")
            .ok_or_else(|| bad("expected a leading \"0.\""))?;
        let (digits, base) = body
            .rsplit_once(")_")
            .ok_or_else(|| bad("expected \")_<base>\""))?;
        let base: u32 = base.parse().map_err(|_| bad("bad base"))?;
        let radix = Radix::new(base)?;
        let (pre, per) = digits
            .split_once('(')
            .ok_or_else(|| bad("expected \"(\""))?;
        let parse = |s: &str| {
            s.chars()
                .map(|c| radix.parse_digit(c))
                .collect::<Result<Vec<u8>>>()
        };
        RadixExpansion::from_parts(radix, parse(pre)?, parse(per)?)
    }
}
