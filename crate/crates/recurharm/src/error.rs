use thiserror::Error;

use crate::render::RenderFormat;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The (n, m) domain is n >= 1, m >= 0.
    #[error("invalid index (n={n}, m={m}): n must be at least 1")]
    InvalidIndex { n: u32, m: u32 },

    /// Reciprocal of zero.
    #[error("reciprocal of zero is undefined")]
    ZeroReciprocal,

    /// A term of the alternating binomial sum left binary64 range.
    #[error("term k={k} of the alternating sum for (n={n}, m={m}) is not finite in binary64")]
    Overflow { n: u32, m: u32, k: u32 },

    /// The requested output format does not apply to this payload.
    #[error("{what} cannot be rendered as {format}")]
    UnsupportedFormat {
        format: RenderFormat,
        what: &'static str,
    },

    /// Malformed or inconsistent serialized data.
    #[error("{0}")]
    Parse(String),
}
