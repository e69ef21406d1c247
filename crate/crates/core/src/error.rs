use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a homology class of a curve: (0, 0)")]
    ZeroClass,
    #[error("class ({a}, {b}) is not primitive")]
    NotPrimitive { a: BigInt, b: BigInt },
    #[error("framing classes do not form a basis (determinant {det})")]
    NotABasis { det: BigInt },
    #[error("not framings of the same knot: meridian slopes differ")]
    MeridianMismatch,
    #[error("cabling curve not simple: gcd({p}, {q}) != 1")]
    CablingNotSimple { p: BigInt, q: BigInt },
    #[error("not a cabling: strand count q = {q}, a cabling requires q >= 2")]
    TooFewStrands { q: BigInt },
    #[error("framing of {torus} must have the meridian of that torus as its first class")]
    FramingNotMeridional { torus: &'static str },
    #[error("inconsistent cable space model: {0}")]
    InconsistentModel(String),
    #[error("framing mismatch with model on {torus}")]
    FramingMismatch { torus: &'static str },
    #[error("matrix dimensions: {0}")]
    Dimension(String),
    #[error("invalid knot description: violates `{invariant}`: {detail}")]
    Validation {
        invariant: &'static str,
        detail: String,
    },
    #[error("not a cable description: {0}")]
    NotCableDescription(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn validation(invariant: &'static str, detail: impl Into<String>) -> Self {
        Error::Validation {
            invariant,
            detail: detail.into(),
        }
    }
}
