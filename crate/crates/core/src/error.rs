use thiserror::Error;

/// Errors raised by the algebra and combinatorics layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("rank {n} exceeds the supported maximum of {max}")]
    RankTooLarge { n: u32, max: u32 },

    #[error("index {index} is outside 1..={max}")]
    IndexOutOfRange { index: u32, max: u32 },

    #[error("{index} is not a member of {subset}")]
    NotAMember { index: u32, subset: String },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("inexact polynomial division")]
    InexactDivision,

    #[error("Monk coefficient needs B = A + {{k}} with k not in A: A = {a}, B = {b}")]
    NotACover { a: String, b: String },

    #[error("class is not stable: term {subset} uses the top index {top}")]
    NotStable { subset: String, top: u32 },

    #[error("localized class is not in the span of the basis (residual at {subset})")]
    NotInSpan { subset: String },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
