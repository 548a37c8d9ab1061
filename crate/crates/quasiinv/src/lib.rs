//! Quasiinvariant spaces by exact linear algebra: `q`-deformed, cyclotomic,
//! twisted and `q`-twisted variants, their graded bases and Hilbert series,
//! freeness diagnostics, Kostka polynomials and the expected series of
//! twisted quasiinvariants for generic twists.
//!
//! Non-integer twists `a_i` never appear as powers of variables: the
//! conditions are written with generalized binomial coefficients at `q = 1`
//! and with integral powers of `𝗊 = q^{1/M}` otherwise.

mod basis;
mod checks;
mod conditions;
mod error;
mod expected;
mod flatness;
mod hilbert;
pub mod kostka;
mod spec;
mod verify;

pub use basis::{degree_basis, graded_basis, GradedBasis};
pub use checks::{ideal_contained, ideal_generator, macdonald_preserves, proportional};
pub use conditions::{columns, conditions_matrix, QuasiField};
pub use error::QuasiError;
pub use expected::{expected_total_series, expected_twisted_series, isotypic_invariant_series};
pub use flatness::{flatness, flatness_cyclotomic, flatness_plain, flatness_twisted_q, sample_deformation, FlatnessReport};
pub use hilbert::{freeness_numerator, hilbert, series_json, FreenessReport, HilbertSeries};
pub use kostka::{kostka, molien_kostka, Partition};
pub use spec::{Parity, QuasiSpec, Variant};
pub use verify::satisfies;
