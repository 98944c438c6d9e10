use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An enumeration would visit more nodes than the configured ceiling.
    #[error("search space of {needed} nodes exceeds the ceiling of {limit} (set REARRANGE_MAX_NODES to raise it)")]
    SizeLimit { needed: u128, limit: u128 },

    /// Inputs whose shapes do not line up (sequence lengths, matrix orders, ...).
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// Malformed values: unparseable rationals, non-bijective images, ragged rows.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// A theorem hypothesis that the caller was supposed to satisfy does not hold.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

pub type Result<T> = std::result::Result<T, Error>;
