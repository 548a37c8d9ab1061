//! Exact matrix-level models of multiplicative quiver varieties for the
//! cyclic quiver with a Calogero-Moser vertex, the associated quadruple
//! varieties, Van den Bergh moment maps and fusion, and local bow data with
//! the Hanany-Witten transition.
//!
//! Everything is over the rationals and every construction re-checks its
//! defining equations exactly before returning.

mod bow;
mod diagram;
mod error;
mod hw;
mod irreducible;
pub mod mat;
mod point;
mod quadruple;
mod vdb;

pub use bow::{check_bow, s1_subspace, s2_subspace, sample_bow, BowData, BowReport, Layout};
pub use diagram::{linkage_invariants, Diagram, Elem};
pub use error::QuiverError;
pub use hw::{alpha_new, beta_new, complex, hw_inverse, hw_transition, round_trip, round_trip_inverse, verify_intertwiner, Intertwiner};
pub use irreducible::{algebra_dimension, irreducibility_check, irreducibility_of, is_invariant, Irreducibility};
pub use mat::Mat;
pub use point::{check_point, sample_chain, PointReport, QuiverPoint, TClass};
pub use quadruple::{check_quadruple, lift_intertwiner, lift_open_locus, product_formula_residuals, psi, Quadruple, QuadrupleReport};
pub use vdb::{
    cell_framing, cell_telescoping, default_order, fusion_moment, vdb_equivariant, vdb_moment, CellReport, FramedData, FramedQuiver,
    HalfArrow, VdBPair,
};
