//! Irreducibility of the action of `{X, D, Y, T}` on `F^N`.
//!
//! The decision uses Burnside's theorem: the action is absolutely
//! irreducible exactly when the generated matrix algebra has dimension `N²`.
//! When it is smaller, a rational invariant subspace is searched for among
//! closures of distinguished vectors and of distinguished covectors.

use serde_json::{json, Value};

use cyclodaha_core::{Field, Matrix, Rational};

use crate::mat::{annihilator, closure, col_basis, minus_scalar, null_space, Mat};
use crate::quadruple::Quadruple;

#[derive(Clone, Debug, PartialEq)]
pub enum Irreducibility {
    Irreducible,
    /// A proper nonzero invariant subspace, as columns.
    Reducible { witness: Mat },
    /// The algebra is a proper subalgebra of `M_N`, but no invariant subspace
    /// defined over the rationals was found among the candidates.
    Inconclusive { algebra_dim: usize },
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }

    pub fn to_json(&self) -> Value {
        match self {
            Irreducibility::Irreducible => json!({"status": "irreducible"}),
            Irreducibility::Reducible { witness } => json!({"status": "reducible", "witness": witness.to_json()}),
            Irreducibility::Inconclusive { algebra_dim } => {
                json!({"status": "inconclusive", "algebra_dim": algebra_dim})
            }
        }
    }
}

fn flatten(m: &Mat) -> Vec<Rational> {
    m.entries().to_vec()
}

/// Dimension of the unital algebra generated by `gens`.
pub fn algebra_dimension(n: usize, gens: &[&Mat]) -> usize {
    let mut basis: Vec<Mat> = vec![Mat::identity(n)];
    let mut frontier = basis.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for g in gens {
                let cand = *g * w;
                let mut cols: Vec<Vec<Rational>> = basis.iter().map(flatten).collect();
                let before = Matrix::from_cols(n * n, &cols).rank();
                cols.push(flatten(&cand));
                if Matrix::from_cols(n * n, &cols).rank() > before {
                    basis.push(cand.clone());
                    next.push(cand);
                }
            }
        }
        frontier = next;
    }
    basis.len()
}

/// Irreducibility of an arbitrary family of `N × N` matrices, with
/// candidate vectors (as columns) to seed the witness search.
pub fn irreducibility_of(n: usize, gens: &[&Mat], candidates: &[Mat]) -> Irreducibility {
    if n <= 1 {
        return Irreducibility::Irreducible;
    }
    let dim = algebra_dimension(n, gens);
    if dim == n * n {
        return Irreducibility::Irreducible;
    }
    let proper = |s: &Mat| s.cols() > 0 && s.cols() < n;
    let mut seeds: Vec<Mat> = (0..n)
        .map(|i| {
            let mut e = Mat::zeros(n, 1);
            e.set(i, 0, Rational::one());
            e
        })
        .collect();
    for c in candidates {
        for j in 0..c.cols() {
            seeds.push(c.block(0, n, j, j + 1));
        }
    }
    for v in &seeds {
        let s = closure(v, gens);
        if proper(&s) {
            return Irreducibility::Reducible { witness: s };
        }
    }
    // Invariant quotients: a proper subspace of covectors stable under the
    // transposes has an invariant annihilator.
    let transposed: Vec<Mat> = gens.iter().map(|g| g.transpose()).collect();
    let trefs: Vec<&Mat> = transposed.iter().collect();
    for v in &seeds {
        let s = closure(v, &trefs);
        if proper(&s) {
            return Irreducibility::Reducible { witness: col_basis(&annihilator(&s).transpose()) };
        }
    }
    Irreducibility::Inconclusive { algebra_dim: dim }
}

/// Whether `{X, D, Y, T}` acts irreducibly. Candidate witnesses are the
/// kernels of `D`, `X`, `Y − Z_i`, `YT − tZ_i` and their transposes.
pub fn irreducibility_check(q: &Quadruple) -> Irreducibility {
    let yt = q.yt();
    let mut special: Vec<Mat> = vec![q.d.clone(), q.x.clone()];
    for zi in &q.z {
        special.push(minus_scalar(&q.y, zi));
        special.push(minus_scalar(&yt, &(q.t.clone() * zi)));
    }
    let mut candidates: Vec<Mat> = special.iter().map(null_space).collect();
    candidates.extend(special.iter().map(|m| null_space(&m.transpose())));
    irreducibility_of(q.n, &[&q.x, &q.d, &q.y, &q.tmat], &candidates)
}

/// Check that the columns of `w` span a subspace invariant under every
/// generator.
pub fn is_invariant(w: &Mat, gens: &[&Mat]) -> bool {
    let ann = annihilator(w);
    gens.iter().all(|g| (&(&ann * *g) * w).is_zero())
}
