use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input (dimension mismatch, invalid curve, bad plan...).
    #[error("invalid input: {0}")]
    Input(String),

    /// A requested size exceeds the limits of the bounded searches.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// The operation is defined, but not for this kind of object.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A move whose applicability criterion does not hold.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// A consistency check on a computed result failed.
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn not_applicable(msg: impl Into<String>) -> Self {
        Error::NotApplicable(msg.into())
    }
}
