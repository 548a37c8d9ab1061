//! Commuting operators built from the DAHA polynomial representation: the
//! family `Y_i(f)`, the Hecke symmetrizer, Macdonald-type difference
//! operators and the symmetric Hamiltonians `𝓜_r(f)` and `𝐌_r(f) = φ(𝓜_r(f))`.

mod error;
mod formulas;
mod hamiltonian;
mod polyparam;

pub use error::MacError;
pub use formulas::{m1_l1, m1_l1_at, macdonald_m1, macdonald_m1_any_at, macdonald_m1_at, symmetric_basis};
pub use hamiltonian::{
    cyclotomic_hamiltonian, elementary_symmetric, hamiltonian, hecke_symmetrize, hecke_symmetrizer, y_f,
    SymmetricOperator,
};
pub use polyparam::PolyParam;
