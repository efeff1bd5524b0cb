use thiserror::Error;

use crate::matrix::IntMatrix;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus must be at least 1, got {0}")]
    InvalidGenus(u64),

    #[error("length mismatch: expected {expected} coordinates, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("class {0} is not primitive (gcd {1}); no simple closed curve carries it")]
    ImprimitiveClass(String, String),

    #[error("zero class cannot label a nonseparating twist")]
    ZeroNonseparating,

    #[error("separating type h = {h} out of range 1..={max} for genus {genus}")]
    SeparatingTypeOutOfRange { h: u32, max: u32, genus: u32 },

    #[error("separating twists are not allowed at genus 1")]
    SeparatingAtGenusOne,

    #[error("chain curve index {k} out of range 1..={max}")]
    ChainIndexOutOfRange { k: u32, max: u32 },

    #[error("words must contain at least one twist")]
    EmptyWord,

    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(u32, u32),

    #[error("position {position} out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("matrix is not in the integral symplectic group")]
    NotSymplectic,

    #[error("monodromy product is not the identity; the word is not a relation")]
    RelationFailed(Box<IntMatrix>),

    #[error("(sigma + r) = {0} is not divisible by 4; hodge degree is not integral")]
    NonIntegralHodgeDegree(i64),

    #[error("genus-2 divisibility fails: n + 2s = {0} is not divisible by 10")]
    DivisibilityFailed(u64),

    #[error("operation requires genus {required}, word has genus {actual}")]
    WrongGenus { required: u32, actual: u32 },

    #[error("word length {0} exceeds the maximum of {max}", max = crate::dsl::MAX_TWISTS)]
    WordTooLong(u64),

    #[error("power must be at least 1")]
    ZeroPower,
}
