//! Exact operator engine for the polynomial representations of the
//! double affine Hecke algebra, its degeneration, and the cyclotomic
//! rational Cherednik algebra.
//!
//! A [`Rep`] fixes the family, the rank `N`, the level `l` and numeric
//! parameters. An [`OperatorExpr`] is a formal linear combination of
//! generator words, evaluated on [`LaurentPoly`](cyclodaha_core::LaurentPoly)
//! by [`apply_expr`]. Equality is decided by evaluation on a monomial box
//! ([`op_equal_on_box`]) or on random monomials at resampled parameters
//! ([`op_equal_randomized`]).

pub mod action;
pub mod coef;
pub mod equality;
pub mod error;
pub mod expr;
pub mod gen;
pub mod parse;
pub mod rep;

pub use action::{apply_expr, apply_generator};
pub use coef::{Coef, PPoly, Param};
pub use equality::{
    default_radius, op_equal_on_box, op_equal_on_polynomials, op_equal_randomized, EqualityReport, Mode, Witness,
};
pub use error::OpsError;
pub use expr::{OperatorExpr, Word};
pub use gen::Gen;
pub use parse::parse_expr;
pub use rep::{Family, Rep};
