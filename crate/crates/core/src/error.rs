//! Crate-wide error type.

use crate::Natural;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Pell's equation `u² − d·v² = 1` has no positive solution when `d` is a
    /// perfect square.
    #[error("d = {0} is a perfect square; u^2 - d*v^2 = 1 has no positive solution")]
    SquareInput(Natural),

    /// Two Pell solutions over different `d` cannot be composed.
    #[error("mismatched Pell parameters: d = {0} vs d = {1}")]
    MismatchedD(Natural, Natural),

    /// The witness family of an instance requires `d = a(a+k)` nonsquare.
    #[error("a(a+k) = {d} is a perfect square for a = {a}, k = {k}; no witness family exists")]
    SquareD { a: Natural, k: Natural, d: Natural },

    /// A set file (or element list) failed strict ingestion.
    #[error("malformed set input at line {line}: {reason}")]
    MalformedSet { line: usize, reason: String },

    /// A sample generator was asked for an impossible configuration.
    #[error("invalid generator parameters: {0}")]
    InvalidGenerator(String),
}

pub type Result<T> = std::result::Result<T, Error>;
