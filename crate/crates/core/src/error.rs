use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Code parameters or a channel setting that violate their invariants.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A 1-indexed position that does not fall inside `1..=n`.
    #[error("position {position} is outside 1..={n}")]
    PositionRange { position: usize, n: usize },

    /// A block whose length does not match what the code expects.
    #[error("expected a block of {expected} bits, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    /// Two matrices that had to share a shape did not.
    #[error("matrix shapes differ: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),

    /// A brute-force enumeration that would exceed its configured guard.
    #[error("enumerating 2^{m} data blocks exceeds the guard m <= {limit}")]
    ResourceLimit { m: usize, limit: usize },

    /// A coded stream that cannot be parsed.
    #[error("malformed coded stream: {0}")]
    Format(String),

    #[error("not a bit string: {0:?}")]
    ParseBits(String),
}
