use rayon::prelude::*;
use serde_json::{json, Value};

use cyclodaha_core::{LaurentPoly, Matrix};

use crate::conditions::{columns, conditions_matrix, QuasiField};
use crate::error::QuasiError;
use crate::spec::QuasiSpec;
use crate::verify::satisfies;

/// Bases of the homogeneous components of degrees `0..=maxdeg`.
#[derive(Clone, Debug)]
pub struct GradedBasis<F: QuasiField> {
    pub spec: QuasiSpec,
    pub degrees: Vec<Vec<LaurentPoly<F>>>,
}

impl<F: QuasiField> GradedBasis<F> {
    pub fn maxdeg(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(Vec::len).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "spec": self.spec.to_json(),
            "dims": self.dims(),
            "basis": self.degrees.iter().map(|d| d.iter().map(|p| p.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Null space of the degree-`d` system, as polynomials.
pub fn degree_basis<F: QuasiField>(spec: &QuasiSpec, d: usize) -> Result<Vec<LaurentPoly<F>>, QuasiError> {
    let cols = columns(spec, d);
    let a: Matrix<F> = conditions_matrix(spec, d)?;
    let kernel = if a.rows() == 0 { Matrix::identity(cols.len()) } else { a.kernel() };
    let mut out = Vec::with_capacity(kernel.cols());
    for t in 0..kernel.cols() {
        let p = LaurentPoly::from_terms(
            spec.n,
            cols.iter().enumerate().map(|(c, e)| (e.clone(), kernel.get(c, t).clone())),
        );
        if !satisfies(spec, &p)? {
            return Err(QuasiError::RecheckFailed { degree: d });
        }
        out.push(p);
    }
    Ok(out)
}

/// Exact bases in every degree up to `maxdeg`, each element re-verified
/// against the raw conditions. Degrees are solved in parallel.
pub fn graded_basis<F: QuasiField>(spec: &QuasiSpec, maxdeg: usize) -> Result<GradedBasis<F>, QuasiError> {
    spec.validate()?;
    let degrees = (0..=maxdeg)
        .into_par_iter()
        .map(|d| degree_basis(spec, d))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GradedBasis { spec: spec.clone(), degrees })
}
