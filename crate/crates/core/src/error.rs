use thiserror::Error;

use crate::sequences::SequenceKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation (odd `s` where an
    /// even one is required, composite modulus, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A division that must be exact left a remainder. This only happens if a
    /// sequence generator is broken.
    #[error("internal inconsistency: {what}: {numerator} is not divisible by {divisor}")]
    Inexact {
        what: &'static str,
        numerator: String,
        divisor: u32,
    },

    #[error("no closed form for {kind} with power m = {m}")]
    UnsupportedQuery { kind: SequenceKind, m: u32 },

    #[error("valuation of zero is infinite")]
    InfiniteValuation,
}
