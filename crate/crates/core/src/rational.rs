//! Exact rational helpers.
//!
//! Every parameter in the crate is a [`Rational`] (an unbounded
//! numerator/denominator pair). Floors such as `[n·a]` are computed by exact
//! integer division, never through floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Builds `p/q`. Panics when `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_int<T: Into<BigInt>>(n: T) -> Rational {
    Rational::from_integer(n.into())
}

/// `[n·x]`, exact.
pub fn floor_mul(n: u64, x: &Rational) -> BigInt {
    (x.numer() * BigInt::from(n)).div_floor(x.denom())
}

/// `[n·x]` narrowed to `u64`; `None` when negative or too large.
pub fn floor_mul_u64(n: u64, x: &Rational) -> Option<u64> {
    floor_mul(n, x).to_u64()
}

/// Parses `p/q`, an integer, or a finite decimal such as `-0.125`.
///
/// Decimals are converted exactly, so `"0.2"` is `1/5`.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::parse(input, "empty number"));
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = parse_integer(input, p.trim())?;
        let q = parse_integer(input, q.trim())?;
        if q.is_zero() {
            return Err(Error::parse(input, "zero denominator"));
        }
        return Ok(Rational::new(p, q));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::parse(input, "no digits"));
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return Err(Error::parse(input, "expected p/q or a finite decimal"));
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits
            .parse()
            .map_err(|_| Error::parse(input, "bad digits"))?
    };
    let denom = num_traits::pow(BigInt::from(10u32), frac_part.len());
    let value = Rational::new(numer, denom);
    Ok(if negative { -value } else { value })
}

fn parse_integer(input: &str, s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(
            input,
            "expected an integer numerator and denominator",
        ));
    }
    s.parse().map_err(|_| Error::parse(input, "bad integer"))
}

/// Renders `x` as `p/q`, always with an explicit denominator.
pub fn to_fraction_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Renders `x` in decimal with `sig` significant digits, rounding half away
/// from zero. Zero renders as `0`.
pub fn to_decimal_string(x: &Rational, sig: usize) -> String {
    assert!(sig >= 1);
    if x.is_zero() {
        return "0".to_owned();
    }
    let negative = x.is_negative();
    let mag = x.abs();
    // 10^e <= mag < 10^(e+1)
    let mut e = decimal_exponent(&mag);
    let mut scale = sig as i64 - 1 - e;
    let mut m = round_scaled(&mag, scale);
    if m >= num_traits::pow(BigInt::from(10u32), sig) {
        e += 1;
        scale = sig as i64 - 1 - e;
        m = round_scaled(&mag, scale);
    }
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if scale <= 0 {
        out.push_str(&m.to_string());
        out.extend(std::iter::repeat_n('0', (-scale) as usize));
        return out;
    }
    let digits = m.to_string();
    let scale = scale as usize;
    if digits.len() <= scale {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', scale - digits.len()));
        out.push_str(&digits);
    } else {
        let (int, frac) = digits.split_at(digits.len() - scale);
        out.push_str(int);
        out.push('.');
        out.push_str(frac);
    }
    out
}

fn decimal_exponent(mag: &Rational) -> i64 {
    let ten = from_int(10);
    let mut e: i64 = mag.numer().to_string().len() as i64 - mag.denom().to_string().len() as i64;
    loop {
        let p = pow10(e);
        if &p > mag {
            e -= 1;
        } else if &(p * &ten) <= mag {
            e += 1;
        } else {
            return e;
        }
    }
}

fn pow10(e: i64) -> Rational {
    let p = num_traits::pow(BigInt::from(10u32), e.unsigned_abs() as usize);
    if e >= 0 {
        from_int(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

fn round_scaled(mag: &Rational, scale: i64) -> BigInt {
    let scaled = mag * pow10(scale);
    let two = BigInt::from(2);
    // floor(scaled + 1/2)
    (scaled.numer() * &two + scaled.denom()).div_floor(&(scaled.denom() * two))
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
