//! Direct membership test, written against the polynomial itself by
//! substitution and series expansion rather than through the row formulas of
//! the solver.

use cyclodaha_core::series::{binomial_series, expand_scaled};
use cyclodaha_core::{Field, LaurentPoly, Monomial, Rational, Subst};

use crate::conditions::{shifts, zeta, QuasiField};
use crate::error::QuasiError;
use crate::spec::{QuasiSpec, Variant};

fn keep_all<F: Field>(n: usize) -> Vec<Subst<F>> {
    (0..n).map(Subst::keep).collect()
}

/// `X_i ↦ c·X_j`, everything else fixed.
fn restrict<F: Field>(f: &LaurentPoly<F>, i: usize, j: usize, c: F) -> Result<LaurentPoly<F>, QuasiError> {
    let mut rules = keep_all(f.nvars());
    rules[i] = Subst::Var { target: j, scale: c };
    Ok(f.substitute(&rules)?)
}

/// `F(…, ζ^r x_j, …, ζ^{−r} x_i, …)` with the new entries in slots `i` and `j`.
fn twisted_swap<F: QuasiField>(f: &LaurentPoly<F>, i: usize, j: usize, l: usize, r: i64) -> Result<LaurentPoly<F>, QuasiError> {
    let mut rules = keep_all(f.nvars());
    rules[i] = Subst::Var { target: j, scale: zeta(l, r)? };
    rules[j] = Subst::Var { target: i, scale: zeta(l, -r)? };
    Ok(f.substitute(&rules)?)
}

fn series_vanishes<F: Field>(s: &cyclodaha_core::TruncatedSeries<F>) -> bool {
    s.coeffs().iter().all(|c| c.is_zero())
}

fn pair_ok<F: QuasiField>(spec: &QuasiSpec, f: &LaurentPoly<F>, i: usize, j: usize) -> Result<bool, QuasiError> {
    let k = 2 * spec.m as usize;
    let swapped = f.swap(i, j);
    match spec.variant {
        Variant::Cyc => {
            for r in 0..spec.l as i64 {
                let g = f - &twisted_swap(f, i, j, spec.l, r)?;
                if spec.is_classical() {
                    // x_j = ζ^{−r} x_i (1 + u)
                    if !series_vanishes(&expand_scaled(&g, i, j, &zeta(spec.l, -r)?, k)) {
                        return Ok(false);
                    }
                } else {
                    for p in shifts(spec.m) {
                        let c = zeta::<F>(spec.l, r)? * &F::from_rational(&spec.q.pow(p).expect("nonzero"));
                        if !restrict(&g, i, j, c)?.is_zero() {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }
        _ if spec.is_classical() => {
            // X_j = X_i(1 + u): X^a F picks up (1+u)^{a_j}, its swap (1+u)^{a_i}
            let lift = |a: &Rational| binomial_series(a, k).iter().map(F::from_rational).collect::<Vec<F>>();
            let lhs = expand_scaled(f, i, j, &F::one(), k).mul_scalar_series(&lift(&spec.a[j]));
            let rhs = expand_scaled(&swapped, i, j, &F::one(), k).mul_scalar_series(&lift(&spec.a[i]));
            Ok(series_vanishes(&lhs.sub(&rhs)))
        }
        _ => {
            let mm = spec.denominator();
            let big_m = Rational::from_i64(mm);
            for p in shifts(spec.m) {
                let c = F::from_rational(&spec.q.pow(p * mm).expect("nonzero"));
                let wi = F::from_rational(&spec.q.pow(p * (&spec.a[i] * &big_m).to_i64().expect("integral")).expect("nonzero"));
                let wj = F::from_rational(&spec.q.pow(p * (&spec.a[j] * &big_m).to_i64().expect("integral")).expect("nonzero"));
                let lhs = restrict(f, i, j, c.clone())?.scale(&wi);
                let rhs = restrict(&swapped, i, j, c)?.scale(&wj);
                if lhs != rhs {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

fn projector_ok<F: Field>(spec: &QuasiSpec, f: &LaurentPoly<F>) -> bool {
    let l = spec.l as i32;
    for i in 0..spec.n {
        for r in 1..l {
            let part = LaurentPoly::from_terms(
                f.nvars(),
                f.terms().filter(|(e, _)| e.0[i].rem_euclid(l) == r).map(|(e, c)| (e.clone(), c.clone())),
            );
            let need = r + spec.mr[r as usize - 1] as i32 * l;
            let mut e = vec![0; f.nvars()];
            e[i] = -need;
            if !part.shift(&Monomial(e)).is_polynomial() {
                return false;
            }
        }
    }
    true
}

/// Whether `f` lies in the space described by `spec`.
pub fn satisfies<F: QuasiField>(spec: &QuasiSpec, f: &LaurentPoly<F>) -> Result<bool, QuasiError> {
    spec.validate()?;
    if f.nvars() != spec.n {
        return Err(QuasiError::BadSpec(format!("polynomial in {} variables, spec has N = {}", f.nvars(), spec.n)));
    }
    if let Some(p) = spec.parity {
        if f.swap(p.i, p.j).scale(&F::from_i64(p.sign as i64)) != *f {
            return Ok(false);
        }
    }
    if spec.variant == Variant::Cyc && !projector_ok(spec, f) {
        return Ok(false);
    }
    for i in 0..spec.n {
        for j in i + 1..spec.n {
            if !pair_ok(spec, f, i, j)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
