use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand index {index} out of range for {strands} strands")]
    OutOfRange { index: usize, strands: usize },

    #[error("cannot include a braid on {from} strands into {to} strands")]
    BadInclusion { from: usize, to: usize },

    #[error("braid is not pure")]
    NotPure,

    #[error("expected an odd strand count, got {0}")]
    EvenStrands(usize),

    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("word length {len} exceeds the cap of {cap} letters")]
    WordTooLong { len: usize, cap: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("closure has {0} components, expected a knot")]
    MultiComponent(usize),

    #[error("invalid pairing: {0}")]
    InvalidPairing(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("diagram has {crossings} crossings, above the cap of {cap}")]
    CrossingCap { crossings: usize, cap: usize },

    #[error("polynomial coefficient overflow")]
    CoefficientOverflow,

    #[error("non-integral exponent after substituting t for A^-4")]
    NonIntegralExponent,

    #[error("order {0} is outside the supported range 2..=4")]
    UnsupportedOrder(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
