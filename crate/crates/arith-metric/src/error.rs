use std::fmt;

/// Errors reported by every fallible operation in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A precondition on an argument was violated (zero where a natural is
    /// required, a composite where a prime is required, unparsable input).
    InvalidArgument(String),
    /// The input is structurally fine but exceeds a configured or hard
    /// limit: sieve limit, vertex cap, 64-bit overflow of a product.
    OutOfRange(String),
    /// A query was issued against an index holding no values.
    EmptyIndex,
    /// An internal bound was exhausted. Not expected to occur; reported
    /// instead of panicking so callers can surface it.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::OutOfRange(msg) => write!(f, "out of range: {msg}"),
            Error::EmptyIndex => write!(f, "index is empty"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn out_of_range(msg: impl Into<String>) -> Error {
    Error::OutOfRange(msg.into())
}
