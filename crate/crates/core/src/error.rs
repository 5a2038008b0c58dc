use thiserror::Error;

/// Errors raised by the digit machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radix must lie in 2..=36, got {0}")]
    InvalidRadix(u32),
    #[error("digit {digit} is out of range for radix {radix}")]
    DigitOutOfRange { digit: u8, radix: u32 },
    /// A parameter lies outside the domain of the operation.
    #[error("{0}")]
    Domain(String),
    /// The parameters are in range but no digit sequence can realise them.
    #[error("{0}")]
    Infeasible(String),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_owned(),
            reason: reason.into(),
        }
    }

    /// Short machine-readable tag for the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidRadix(_) | Error::DigitOutOfRange { .. } | Error::Domain(_) => "domain",
            Error::Infeasible(_) => "infeasible",
            Error::Parse { .. } => "parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
