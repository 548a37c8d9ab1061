use cyclodaha_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OpsError {
    #[error("generator {gen} is not available in the {family} family")]
    FamilyMismatch { gen: String, family: String },
    #[error("generator {gen} has index out of range for N = {n}")]
    IndexOutOfRange { gen: String, n: usize },
    #[error("parameter {0} is not set in this representation")]
    MissingParam(String),
    #[error("coefficient denominator vanishes at the chosen parameters")]
    SingularCoefficient,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("expression is not invertible: {0}")]
    NotInvertible(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}
