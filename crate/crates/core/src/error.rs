use thiserror::Error;

/// Errors raised by the in-memory graph, classification and oracle APIs.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("multisign width must be in 1..=64, got {0}")]
    InvalidWidth(usize),

    #[error("multisign width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },

    #[error("invalid multisign text at position {position}: {reason}")]
    SignText {
        position: usize,
        reason: &'static str,
    },

    #[error("graph needs at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },

    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("invalid hourglass positions i={i}, j={j}: {reason}")]
    InvalidHourglass {
        i: usize,
        j: usize,
        reason: &'static str,
    },

    #[error("{what} is capped at n={cap}, got n={n}; use the theorem path for larger graphs")]
    EnumerationCap {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("graph space of size 2^{bits} exceeds the 2^{cap_bits} cap")]
    SpaceTooLarge { bits: usize, cap_bits: usize },

    #[error("negative-sign probability must be in [0, 1], got {0}")]
    InvalidProbability(f64),

    #[error("index range {start}..{end} outside graph space of size 2^{bits}")]
    IndexRange { start: u64, end: u64, bits: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("switching selector has {got} entries for {n} vertices")]
    SelectorLength { got: usize, n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
