use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Base `s` of a digit expansion. Digits are drawn from `{0, …, s−1}`.
///
/// Bases above 36 are rejected so that every digit has a single-character
/// rendering (`0-9a-z`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Radix(u32);

impl Radix {
    pub const MAX: u32 = 36;
    pub const BINARY: Radix = Radix(2);
    pub const TERNARY: Radix = Radix(3);
    pub const DECIMAL: Radix = Radix(10);

    pub fn new(s: u32) -> Result<Self> {
        if (2..=Self::MAX).contains(&s) {
            Ok(Radix(s))
        } else {
            Err(Error::InvalidRadix(s))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// The largest digit, `s − 1`.
    #[inline]
    pub fn max_digit(self) -> u8 {
        (self.0 - 1) as u8
    }

    #[inline]
    pub fn contains(self, digit: u8) -> bool {
        u32::from(digit) < self.0
    }

    pub fn check(self, digit: u8) -> Result<u8> {
        if self.contains(digit) {
            Ok(digit)
        } else {
            Err(Error::DigitOutOfRange {
                digit,
                radix: self.0,
            })
        }
    }

    pub fn digit_char(self, digit: u8) -> char {
        debug_assert!(self.contains(digit));
        char::from_digit(u32::from(digit), Self::MAX).expect("digit below 36")
    }

    /// Inverse of [`Radix::digit_char`]; accepts upper or lower case letters.
    pub fn parse_digit(self, c: char) -> Result<u8> {
        let d = c
            .to_digit(Self::MAX)
            .ok_or_else(|| Error::parse(&c.to_string(), "not a digit character"))?;
        self.check(d as u8)
    }
}

impl TryFrom<u32> for Radix {
    type Error = Error;

    fn try_from(s: u32) -> Result<Self> {
        Radix::new(s)
    }
}

impl From<Radix> for u32 {
    fn from(r: Radix) -> u32 {
        r.0
    }
}

impl fmt::Display for Radix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Renders digits as a string of digit characters.
pub fn digits_to_string(radix: Radix, digits: &[u8]) -> String {
    digits.iter().map(|&d| radix.digit_char(d)).collect()
}

/// Parses a digit corpus: one character per digit, ASCII whitespace ignored.
pub fn parse_digit_text(radix: Radix, text: &str) -> Result<Vec<u8>> {
    text.chars()
        .filter(|c| !c.is_ascii_whitespace())
        .map(|c| radix.parse_digit(c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        assert!(Radix::new(1).is_err());
        assert!(Radix::new(0).is_err());
        assert!(Radix::new(37).is_err());
        assert_eq!(Radix::new(3).unwrap().max_digit(), 2);
        assert!(Radix::TERNARY.check(3).is_err());
        assert_eq!(Radix::TERNARY.check(2), Ok(2));
    }

    #[test]
    fn digit_text() {
        let hex = Radix::new(16).unwrap();
        assert_eq!(digits_to_string(hex, &[0, 10, 15]), "0af");
        assert_eq!(parse_digit_text(hex, "0 A\nf").unwrap(), vec![0, 10, 15]);
        assert!(parse_digit_text(Radix::TERNARY, "0123").is_err());
    }
}
