use thiserror::Error;

#[derive(Debug, Error)]
pub enum MacError {
    #[error("input polynomial is not symmetric")]
    InputNotSymmetric,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("Y_{i}(f) and Y_{j}(f) do not commute on the test box")]
    NotCommuting { i: usize, j: usize },
    #[error("index {i} out of range for N = {n}")]
    IndexOutOfRange { i: usize, n: usize },
    #[error(transparent)]
    Ops(#[from] cyclodaha_ops::OpsError),
    #[error(transparent)]
    Core(#[from] cyclodaha_core::CoreError),
    #[error(transparent)]
    Algebra(#[from] cyclodaha_algebra::AlgebraError),
}
