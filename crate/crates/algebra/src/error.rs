use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("unknown relation family {0:?}")]
    UnknownFamily(String),
    #[error("rank must be positive, got {0}")]
    BadRank(usize),
    #[error("generator {gen} is not in the domain of the {involution} involution")]
    NotInDomain { gen: String, involution: String },
    #[error("the catalog {catalog} is evaluated in the {expected} family, got {got}")]
    WrongFamily { catalog: String, expected: String, got: String },
    #[error(transparent)]
    Ops(#[from] cyclodaha_ops::OpsError),
}
