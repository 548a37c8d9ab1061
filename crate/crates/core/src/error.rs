use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("non-invertible scale: a zero scale meets a negative exponent of X{0}")]
    NonInvertibleScale(usize),
    #[error("sampling exhausted after {0} attempts")]
    SamplingExhausted(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("singular matrix")]
    Singular,
}
