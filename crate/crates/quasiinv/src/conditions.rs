//! The defining conditions of one graded piece as an explicit linear system.
//!
//! Every condition is a statement about `F` restricted to a hyperplane
//! `X_i = c·X_j`, so it splits along classes of monomials that restrict to
//! the same monomial: those with equal `e_i + e_j` and equal exponents
//! elsewhere. Within a class each condition is a single linear row.

use std::collections::{BTreeMap, HashSet};

use cyclodaha_core::laurent::homogeneous_monomials;
use cyclodaha_core::series::generalized_binomial;
use cyclodaha_core::{Cyclo, Field, Matrix, Monomial, Rational};

use crate::error::QuasiError;
use crate::spec::{QuasiSpec, Variant};

/// A coefficient field that can hold the `l`-th roots of unity needed by the
/// cyclotomic conditions.
pub trait QuasiField: Field {
    /// `ζ_l^k`, if representable.
    fn zeta_pow(l: usize, k: i64) -> Option<Self>;
}

impl QuasiField for Rational {
    fn zeta_pow(l: usize, k: i64) -> Option<Self> {
        match l {
            1 => Some(Rational::one()),
            2 => Some(Rational::from_i64(if k.rem_euclid(2) == 0 { 1 } else { -1 })),
            _ => None,
        }
    }
}

impl QuasiField for Cyclo {
    fn zeta_pow(l: usize, k: i64) -> Option<Self> {
        Some(Cyclo::zeta_pow(l as u32, k))
    }
}

pub(crate) fn zeta<F: QuasiField>(l: usize, k: i64) -> Result<F, QuasiError> {
    F::zeta_pow(l, k).ok_or(QuasiError::NoRootOfUnity(l))
}

fn rat<F: Field>(r: &Rational) -> F {
    F::from_rational(r)
}

fn pw(x: &Rational, e: i64) -> Rational {
    x.pow(e).expect("nonzero base")
}

/// Deformation points `p ∈ {−m, …, m}∖{0}`.
pub(crate) fn shifts(m: u32) -> impl Iterator<Item = i64> {
    let m = m as i64;
    (-m..=m).filter(|&p| p != 0)
}

/// The monomials indexing the columns of [`conditions_matrix`] in degree `d`.
pub fn columns(spec: &QuasiSpec, d: usize) -> Vec<Monomial> {
    homogeneous_monomials(spec.n, d as u32)
}

fn classes(cols: &[Monomial], i: usize, j: usize) -> BTreeMap<Monomial, Vec<usize>> {
    let mut out: BTreeMap<Monomial, Vec<usize>> = BTreeMap::new();
    for (c, e) in cols.iter().enumerate() {
        let mut key = e.clone();
        key.0[i] += key.0[j];
        key.0[j] = 0;
        out.entry(key).or_default().push(c);
    }
    out
}

/// Pairwise hyperplane rows for the pair `(i, j)`. Each weight maps a column
/// monomial to its coefficient in one condition; the order-zero vanishing
/// condition is automatic and never emitted.
fn pair_rows<F: QuasiField>(
    spec: &QuasiSpec,
    cols: &[Monomial],
    i: usize,
    j: usize,
    rows: &mut Vec<Vec<F>>,
) -> Result<(), QuasiError> {
    let m = spec.m;
    let mut weights: Vec<Box<dyn Fn(&Monomial) -> F>> = Vec::new();
    let ai = spec.a[i].clone();
    let aj = spec.a[j].clone();
    match spec.variant {
        Variant::Cyc => {
            for r in 0..spec.l as i64 {
                let zs: Vec<F> = (0..spec.l as i64).map(|k| zeta::<F>(spec.l, r * k)).collect::<Result<_, _>>()?;
                let l = spec.l as i64;
                if spec.is_classical() {
                    for k in 1..=2 * m as usize {
                        let zs = zs.clone();
                        weights.push(Box::new(move |e: &Monomial| {
                            let (ei, ej) = (e.0[i] as i64, e.0[j] as i64);
                            let b = generalized_binomial(&Rational::from_i64(ei), k)
                                - generalized_binomial(&Rational::from_i64(ej), k);
                            zs[ei.rem_euclid(l) as usize].clone() * &rat::<F>(&b)
                        }));
                    }
                } else {
                    for p in shifts(m) {
                        let (zs, bq) = (zs.clone(), spec.q.clone());
                        weights.push(Box::new(move |e: &Monomial| {
                            let (ei, ej) = (e.0[i] as i64, e.0[j] as i64);
                            let b = pw(&bq, p * ei) - pw(&bq, p * ej);
                            zs[ei.rem_euclid(l) as usize].clone() * &rat::<F>(&b)
                        }));
                    }
                }
            }
        }
        _ if spec.is_classical() => {
            for k in 1..=2 * m as usize {
                let (ai, aj) = (ai.clone(), aj.clone());
                weights.push(Box::new(move |e: &Monomial| {
                    let bi = generalized_binomial(&(&ai + &Rational::from_i64(e.0[i] as i64)), k);
                    let bj = generalized_binomial(&(&aj + &Rational::from_i64(e.0[j] as i64)), k);
                    rat::<F>(&(bi - bj))
                }));
            }
        }
        _ => {
            // q^{p(a + e)} = 𝗊^{pM(a + e)}; for untwisted a = 0 and M = 1
            let mm = spec.denominator();
            let mi = (&ai * &Rational::from_i64(mm)).to_i64().expect("integral");
            let mj = (&aj * &Rational::from_i64(mm)).to_i64().expect("integral");
            for p in shifts(m) {
                let base = spec.q.clone();
                weights.push(Box::new(move |e: &Monomial| {
                    let xi = pw(&base, p * (mi + mm * e.0[i] as i64));
                    let xj = pw(&base, p * (mj + mm * e.0[j] as i64));
                    rat::<F>(&(xi - xj))
                }));
            }
        }
    }
    for class in classes(cols, i, j).values() {
        for wt in &weights {
            let mut row = vec![F::zero(); cols.len()];
            for &c in class {
                row[c] = wt(&cols[c]);
            }
            rows.push(row);
        }
    }
    Ok(())
}

fn normalise<F: Field>(row: &[F]) -> Option<Vec<F>> {
    let lead = row.iter().find(|x| !x.is_zero())?;
    let inv = lead.inv().expect("nonzero");
    Some(row.iter().map(|x| x.clone() * &inv).collect())
}

/// The linear system whose null space is the degree-`d` component of the
/// space described by `spec`. Columns follow [`columns`]; rows are
/// deduplicated up to scale and zero rows are dropped.
pub fn conditions_matrix<F: QuasiField>(spec: &QuasiSpec, d: usize) -> Result<Matrix<F>, QuasiError> {
    spec.validate()?;
    let cols = columns(spec, d);
    let mut rows: Vec<Vec<F>> = Vec::new();
    for i in 0..spec.n {
        for j in i + 1..spec.n {
            pair_rows(spec, &cols, i, j, &mut rows)?;
        }
    }
    if spec.variant == Variant::Cyc {
        let l = spec.l as i32;
        for (c, e) in cols.iter().enumerate() {
            let vanishes = e.0.iter().any(|&ei| {
                let r = ei.rem_euclid(l);
                r != 0 && ei < r + spec.mr[r as usize - 1] as i32 * l
            });
            if vanishes {
                let mut row = vec![F::zero(); cols.len()];
                row[c] = F::one();
                rows.push(row);
            }
        }
    }
    if let Some(p) = spec.parity {
        let index: BTreeMap<&Monomial, usize> = cols.iter().enumerate().map(|(c, e)| (e, c)).collect();
        let sign = F::from_i64(p.sign as i64);
        for (c, e) in cols.iter().enumerate() {
            let mut s = e.clone();
            s.0.swap(p.i, p.j);
            let mut row = vec![F::zero(); cols.len()];
            row[c] = F::one();
            let sc = index[&s];
            row[sc] = row[sc].clone() - &sign;
            rows.push(row);
        }
    }
    let mut seen = HashSet::new();
    let mut kept = Vec::new();
    for row in rows {
        if let Some(nr) = normalise(&row) {
            let key: Vec<String> = nr.iter().map(|x| x.to_string()).collect();
            if seen.insert(key) {
                kept.push(nr);
            }
        }
    }
    Ok(if kept.is_empty() { Matrix::zeros(0, cols.len()) } else { Matrix::from_rows(kept) })
}
