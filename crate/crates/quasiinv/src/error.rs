use cyclodaha_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum QuasiError {
    #[error("invalid specification: {0}")]
    BadSpec(String),
    #[error("parameter-degenerate: {0}")]
    ParameterDegenerate(String),
    #[error("coefficient field cannot represent ζ_{0}")]
    NoRootOfUnity(usize),
    #[error("basis element in degree {degree} fails the defining conditions")]
    RecheckFailed { degree: usize },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Macdonald(#[from] cyclodaha_macdonald::MacError),
}
