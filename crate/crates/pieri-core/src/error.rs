use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parts were not weakly decreasing.
    InvalidPartition(String),
    /// Text could not be parsed; the message names the offending token.
    Parse(String),
    /// An operation's input requirements were violated.
    Precondition(String),
    /// An explicit construction would exceed the configured dimension cap.
    SizeCap { dim: u64, cap: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPartition(p) => write!(f, "not a partition: {p}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
            Error::Precondition(m) => write!(f, "precondition violated: {m}"),
            Error::SizeCap { dim, cap } => {
                write!(f, "module dimension {dim} exceeds size cap {cap}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn pre(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
