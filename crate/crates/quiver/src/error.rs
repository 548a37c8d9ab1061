use thiserror::Error;

use cyclodaha_core::CoreError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("input is not certified: {0}")]
    Uncertified(String),
    #[error("X is not invertible")]
    XNotInvertible,
    #[error("singular factor: {0}")]
    SingularFactor(String),
    #[error("alpha = [D; A; b] is not injective (stability (S1) fails on the input)")]
    AlphaNotInjective,
    #[error("beta^n = [A^n, D^n, a^n] is not surjective (stability (S2) fails on the input)")]
    BetaNotSurjective,
    #[error("inconsistent equations: {0}")]
    Inconsistent(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("sampling exhausted after {0} attempts")]
    SamplingExhausted(usize),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}
