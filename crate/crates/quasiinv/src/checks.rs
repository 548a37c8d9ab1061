//! Structural spot checks on computed spaces.

use cyclodaha_core::laurent::homogeneous_monomials;
use cyclodaha_core::{Field, LaurentPoly, Rational};
use cyclodaha_macdonald::macdonald_m1_any_at;

use crate::basis::GradedBasis;
use crate::conditions::shifts;
use crate::error::QuasiError;
use crate::spec::{QuasiSpec, Variant};
use crate::verify::satisfies;

/// `Π_{i<j} Π_{p=−m}^{m} (X_i − q^p X_j)`; at `q = 1` this is `Π (X_i − X_j)^{2m+1}`.
pub fn ideal_generator(n: usize, m: u32, q: &Rational) -> LaurentPoly<Rational> {
    let mut g = LaurentPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            for p in std::iter::once(0).chain(shifts(m)) {
                let f = &LaurentPoly::var(n, i) - &LaurentPoly::var(n, j).scale(&q.pow(p).expect("nonzero"));
                g = &g * &f;
            }
        }
    }
    g
}

/// Whether the generator times every monomial of degree `≤ extra` lies in
/// `Q_{m,q}`. Returns the number of products checked.
pub fn ideal_contained(spec: &QuasiSpec, extra: usize) -> Result<Option<usize>, QuasiError> {
    if spec.variant != Variant::PlainQ {
        return Err(QuasiError::BadSpec("the ideal check applies to the plain-q variant".into()));
    }
    let g = ideal_generator(spec.n, spec.m, &spec.q);
    let mut count = 0;
    for d in 0..=extra {
        for e in homogeneous_monomials(spec.n, d as u32) {
            if !satisfies(spec, &g.shift(&e))? {
                return Ok(None);
            }
            count += 1;
        }
    }
    Ok(Some(count))
}

/// Apply `M = Σ_j Π_{i≠j}(X_i − tX_j)/(X_i − X_j) τ_j` at `t = q^{−m}` to each
/// basis element of degree `≤ maxdeg` and check the image is again in
/// `Q_{m,q}`. Returns the number of elements checked, or the degree of the first
/// failure.
pub fn macdonald_preserves(basis: &GradedBasis<Rational>, maxdeg: usize) -> Result<Result<usize, usize>, QuasiError> {
    let spec = &basis.spec;
    if spec.variant != Variant::PlainQ || spec.is_classical() {
        return Err(QuasiError::BadSpec("the operator check needs the plain-q variant with q ≠ 1".into()));
    }
    let q = spec.q.clone();
    let t = q.pow(-(spec.m as i64)).expect("nonzero");
    let mut count = 0;
    for (d, elems) in basis.degrees.iter().enumerate().take(maxdeg + 1) {
        for f in elems {
            let image = macdonald_m1_any_at(&q, &t, f)?;
            if !satisfies(spec, &image)? {
                return Ok(Err(d));
            }
            count += 1;
        }
    }
    Ok(Ok(count))
}

/// Whether `f` is a nonzero scalar multiple of `g`.
pub fn proportional<F: Field>(f: &LaurentPoly<F>, g: &LaurentPoly<F>) -> bool {
    let (Some((e, c)), false) = (g.leading_term(), f.is_zero()) else {
        return false;
    };
    let ratio = f.coeff(e).div(c).expect("nonzero");
    !ratio.is_zero() && g.scale(&ratio) == *f
}
