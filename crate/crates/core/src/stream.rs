//! Digit streams.
//!
//! A [`DigitStream`] is a replayable source of digits: every call to
//! [`DigitStream::digits`] starts again from the first digit and yields the
//! same sequence. Streams may be unbounded (expansions, constructions) or
//! finite (literal digit lists).

use crate::error::Result;
use crate::radix::Radix;

pub trait DigitStream {
    fn radix(&self) -> Radix;

    /// A fresh iterator from the first digit.
    fn digits(&self) -> Box<dyn Iterator<Item = u8> + '_>;
}

impl<S: DigitStream + ?Sized> DigitStream for &S {
    fn radix(&self) -> Radix {
        (**self).radix()
    }

    fn digits(&self) -> Box<dyn Iterator<Item = u8> + '_> {
        (**self).digits()
    }
}

impl<S: DigitStream + ?Sized> DigitStream for Box<S> {
    fn radix(&self) -> Radix {
        (**self).radix()
    }

    fn digits(&self) -> Box<dyn Iterator<Item = u8> + '_> {
        (**self).digits()
    }
}

/// A finite, explicit list of digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteDigits {
    radix: Radix,
    digits: Vec<u8>,
}

impl FiniteDigits {
    pub fn new(radix: Radix, digits: Vec<u8>) -> Result<Self> {
        for &d in &digits {
            radix.check(d)?;
        }
        Ok(FiniteDigits { radix, digits })
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }
}

impl DigitStream for FiniteDigits {
    fn radix(&self) -> Radix {
        self.radix
    }

    fn digits(&self) -> Box<dyn Iterator<Item = u8> + '_> {
        Box::new(self.digits.iter().copied())
    }
}

/// The same digit forever.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Constant {
    radix: Radix,
    digit: u8,
}

impl Constant {
    pub fn new(radix: Radix, digit: u8) -> Result<Self> {
        Ok(Constant {
            radix,
            digit: radix.check(digit)?,
        })
    }
}

impl DigitStream for Constant {
    fn radix(&self) -> Radix {
        self.radix
    }

    fn digits(&self) -> Box<dyn Iterator<Item = u8> + '_> {
        Box::new(std::iter::repeat(self.digit))
    }
}

/// A finite prefix followed by another stream.
#[derive(Debug, Clone)]
pub struct Prefixed<S> {
    prefix: Vec<u8>,
    tail: S,
}

impl<S: DigitStream> Prefixed<S> {
    pub fn prefix(&self) -> &[u8] {
        &self.prefix
    }

    pub fn tail(&self) -> &S {
        &self.tail
    }
}

/// Emits `prefix`, then `tail` unchanged. Prefix digits must belong to the
/// tail's radix.
pub fn with_prefix<S: DigitStream>(prefix: Vec<u8>, tail: S) -> Result<Prefixed<S>> {
    let radix = tail.radix();
    for &d in &prefix {
        radix.check(d)?;
    }
    Ok(Prefixed { prefix, tail })
}

impl<S: DigitStream> DigitStream for Prefixed<S> {
    fn radix(&self) -> Radix {
        self.tail.radix()
    }

    fn digits(&self) -> Box<dyn Iterator<Item = u8> + '_> {
        Box::new(self.prefix.iter().copied().chain(self.tail.digits()))
    }
}
