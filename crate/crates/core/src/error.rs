use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A word contains a symbol that does not belong to the alphabet.
    #[error("symbol {symbol} is outside the alphabet {{0..{}}}", .q - 1)]
    SymbolOutOfRange { symbol: u8, q: u8 },

    /// Parameters violate the hypotheses of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An exhaustive search would exceed its work budget.
    #[error("work estimate {needed} exceeds the budget of {budget} units")]
    Budget { needed: u128, budget: u128 },

    /// No codeword lies within edit distance one of the received word.
    #[error("decode failure: {0}")]
    DecodeFailure(String),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),

    /// A proven property failed to hold at runtime.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
