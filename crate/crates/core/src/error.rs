//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Exact polynomial division left a nonzero remainder.
    #[error("not divisible: {0}")]
    NotDivisible(String),

    /// An input exceeded the configured coefficient degree bound.
    #[error("degree bound exceeded: degree {found} > bound {bound}")]
    DegreeBoundExceeded { found: usize, bound: usize },

    /// A form or function failed a required invariance check.
    #[error("not invariant: {0}")]
    NotInvariant(String),

    /// An equivariant form was required to be closed but is not.
    #[error("not closed: {0}")]
    NotClosed(String),

    /// A claimed equivalence fails its equivariance precondition.
    #[error("not equivariant: {0}")]
    NotEquivariant(String),

    /// Scenario index outside the built-in range.
    #[error("unsupported scenario n = {0} (supported: 0, 1, 2)")]
    UnsupportedN(u32),

    /// Expression or file input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// Internal consistency violation; indicates a bug, not a user error.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
