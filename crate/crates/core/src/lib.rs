//! Exact arithmetic substrate shared by every other crate in the workspace.
//!
//! * [`field`]: the [`Field`] trait implemented by [`Rational`], [`Cyclo`] and [`RatFunc`].
//! * [`laurent`]: sparse multivariate Laurent polynomials with substitution,
//!   exact division and divided differences.
//! * [`series`]: polynomials in an auxiliary variable truncated at a fixed order.
//! * [`linalg`]: dense matrices, Gauss–Jordan elimination, kernels and cokernels.
//! * [`sampling`]: deterministic generic-parameter sampling under explicit constraints.

pub mod cyclo;
pub mod error;
pub mod field;
pub mod laurent;
pub mod linalg;
pub mod ratfunc;
pub mod rational;
pub mod sampling;
pub mod series;
pub mod upoly;

pub use cyclo::{cyclo_normalize, cyclotomic_polynomial, Cyclo};
pub use error::CoreError;
pub use field::Field;
pub use laurent::{LaurentPoly, Monomial, Subst};
pub use linalg::Matrix;
pub use ratfunc::{ratfunc_simplify, RatFunc};
pub use rational::Rational;
pub use sampling::{sample_generic, Constraint, SampleSpec, SeedStream};
pub use series::TruncatedSeries;
pub use upoly::UPoly;
