//! Presentations of the double affine Hecke algebra family as explicit relation
//! catalogs, checked against the polynomial representations of `cyclodaha-ops`.
//!
//! * [`catalog`] expands each presentation into concrete instances for a rank `N`.
//! * [`verify`] runs a catalog through box or randomized operator equality.
//! * [`involution`] builds images under the involutive automorphisms.
//! * [`basis`] enumerates PBW-type monomials and measures their independence.

pub mod basis;
pub mod catalog;
pub mod error;
pub mod involution;
pub mod verify;
pub mod words;

pub use basis::{basis_monomials, basis_monomials_ordered, independence_check, Block, BasisElement, BasisShape, DegreeCaps, RankReport};
pub use catalog::{catalog, schema_labels, CatalogId, Relation, RelationCatalog};
pub use error::AlgebraError;
pub use involution::{involution_image, verify_involution, Involution, InvolutionReport};
pub use verify::{check_pair, generic_rep, verify_family, FamilyReport, RelationResult, VerifyMode};
