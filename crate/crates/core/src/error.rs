use num_bigint::BigInt;
use thiserror::Error;

/// Why a pull-based stream stopped producing terms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StreamError {
    /// A bundled table ran out of entries.
    #[error("table `{name}` exhausted after {len} terms")]
    TableExhausted { name: String, len: usize },
    /// The per-stream pull budget was spent.
    #[error("pull budget of {budget} exhausted")]
    BudgetExhausted { budget: usize },
    /// Scanning a run of 2's used up the lookahead fuel.
    #[error("fuel of {fuel} exhausted while scanning a run of 2's")]
    FuelExhausted { fuel: usize },
    /// A producer emitted a term that violates the stream's invariant.
    #[error("invalid term {value} at index {index}: {reason}")]
    InvalidTerm {
        index: usize,
        value: BigInt,
        reason: &'static str,
    },
}

impl StreamError {
    /// True for the exhaustion family (as opposed to malformed producers).
    pub fn is_exhaustion(&self) -> bool {
        !matches!(self, StreamError::InvalidTerm { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error(transparent)]
    Stream(#[from] StreamError),
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
