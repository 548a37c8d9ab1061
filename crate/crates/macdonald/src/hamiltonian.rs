use itertools::Itertools;

use cyclodaha_algebra::basis::permutations_with_reduced_words;
use cyclodaha_algebra::{involution_image, Involution};
use cyclodaha_core::{Field, LaurentPoly, Rational};
use cyclodaha_ops::expr::build::*;
use cyclodaha_ops::{apply_expr, op_equal_on_box, Coef, Family, Gen, OperatorExpr, Param, PPoly, Rep};

use crate::error::MacError;
use crate::formulas::symmetric_basis;
use crate::polyparam::PolyParam;

fn check_index<F: Field>(rep: &Rep<F>, i: usize) -> Result<(), MacError> {
    if i == 0 || i > rep.n() {
        Err(MacError::IndexOutOfRange { i, n: rep.n() })
    } else {
        Ok(())
    }
}

/// `Y_i(f) = Y_i T_{i−1}⁻¹…T_1⁻¹ f(X_1⁻¹) T_1…T_{i−1}`.
pub fn y_f<F: Field>(rep: &Rep<F>, i: usize, f: &PolyParam) -> Result<OperatorExpr, MacError> {
    check_index(rep, i)?;
    let left: Vec<Gen> = (1..i).rev().map(Gen::Tinv).collect();
    let right: Vec<Gen> = (1..i).map(Gen::T).collect();
    Ok(prod(&[g(Gen::Y(i)), w(&left), f.at_x1_inverse(), w(&right)]))
}

/// `𝐞 = (Σ_w 𝐭^{ℓ(w)} T_w) / (Σ_w t^{ℓ(w)})`, normalized so that `T_i 𝐞 = 𝐭 𝐞`.
pub fn hecke_symmetrizer(n: usize) -> OperatorExpr {
    let perms = permutations_with_reduced_words(n);
    let mut poincare = PPoly::zero();
    for (_, red) in &perms {
        poincare = poincare.add(&PPoly::monomial(vec![(Param::Tt, 2 * red.len() as i32)], Rational::from_i64(1)));
    }
    let norm = Coef::from_ppoly(poincare).inv().expect("Poincaré polynomial is nonzero");
    let mut e = OperatorExpr::zero();
    for (_, red) in &perms {
        let c0 = Coef::param_pow(Param::Tt, red.len() as i32).mul(&norm);
        e = e.add(&OperatorExpr::term(c0, red.iter().map(|&i| Gen::T(i)).collect()));
    }
    e
}

/// `𝐞·p`; fails when `[N]_t! = Σ_w t^{ℓ(w)}` vanishes at the representation's `𝐭`.
pub fn hecke_symmetrize<F: Field>(rep: &Rep<F>, p: &LaurentPoly<F>) -> Result<LaurentPoly<F>, MacError> {
    let e = hecke_symmetrizer(rep.n());
    for (_, c0) in e.terms() {
        let d = rep.eval(&Coef::from_ppoly(c0.denom().clone()))?;
        if d.is_zero() {
            return Err(MacError::BadParameter("[N]_t! vanishes".into()));
        }
    }
    Ok(apply_expr(rep, &e, p)?)
}

/// `e_r(a_1, …, a_N)` as a sum of ordered products over increasing index subsets.
pub fn elementary_symmetric(r: usize, xs: &[OperatorExpr]) -> OperatorExpr {
    let mut acc = OperatorExpr::zero();
    for subset in (0..xs.len()).combinations(r) {
        let factors: Vec<OperatorExpr> = subset.iter().map(|&k| xs[k].clone()).collect();
        acc = acc.add(&prod(&factors));
    }
    acc
}

/// An operator certified to map symmetric polynomials of degree at most
/// `certified_degree` to symmetric polynomials.
#[derive(Clone, Debug)]
pub struct SymmetricOperator {
    pub expr: OperatorExpr,
    pub certified_degree: usize,
}

impl SymmetricOperator {
    pub fn apply<F: Field>(&self, rep: &Rep<F>, p: &LaurentPoly<F>) -> Result<LaurentPoly<F>, MacError> {
        if !p.is_symmetric() {
            return Err(MacError::InputNotSymmetric);
        }
        Ok(apply_expr(rep, &self.expr, p)?)
    }
}

fn certify<F: Field>(rep: &Rep<F>, expr: OperatorExpr, degree: usize) -> Result<SymmetricOperator, MacError> {
    for p in symmetric_basis::<F>(rep.n(), degree) {
        if !apply_expr(rep, &expr, &p)?.is_symmetric() {
            return Err(MacError::InputNotSymmetric);
        }
    }
    Ok(SymmetricOperator { expr, certified_degree: degree })
}

fn require_daha<F: Field>(rep: &Rep<F>) -> Result<(), MacError> {
    if rep.family() != Family::Daha {
        return Err(MacError::BadParameter(format!("expected a DAHA representation, got {}", rep.family())));
    }
    Ok(())
}

fn commuting_family<F: Field>(rep: &Rep<F>, ops: &[OperatorExpr]) -> Result<(), MacError> {
    for (a, b) in (0..ops.len()).tuple_combinations() {
        let c = ops[a].commutator(&ops[b]);
        if !op_equal_on_box(rep, &c, &OperatorExpr::zero(), 1)?.result {
            return Err(MacError::NotCommuting { i: a + 1, j: b + 1 });
        }
    }
    Ok(())
}

/// `𝓜_r(f) = e_r(Y_1(f), …, Y_N(f))·𝐞`, certified on symmetric inputs up to `degree`.
/// Commutativity of the `Y_i(f)` is checked on the unit box first.
pub fn hamiltonian<F: Field>(
    rep: &Rep<F>,
    r: usize,
    f: &PolyParam,
    degree: usize,
) -> Result<SymmetricOperator, MacError> {
    require_daha(rep)?;
    check_index(rep, r)?;
    let ys = (1..=rep.n()).map(|i| y_f(rep, i, f)).collect::<Result<Vec<_>, _>>()?;
    commuting_family(rep, &ys)?;
    let expr = elementary_symmetric(r, &ys).compose(&hecke_symmetrizer(rep.n()));
    certify(rep, expr, degree)
}

/// `𝐌_r(f) = φ(𝓜_r(f))` under the Cherednik involution; for `f = (X − Z_1)…(X − Z_l)`
/// this is `e_r(D_1^{(l)}, …, D_N^{(l)})·𝐞`.
pub fn cyclotomic_hamiltonian<F: Field>(
    rep: &Rep<F>,
    r: usize,
    f: &PolyParam,
    degree: usize,
) -> Result<SymmetricOperator, MacError> {
    require_daha(rep)?;
    check_index(rep, r)?;
    let n = rep.n();
    let ys = (1..=n).map(|i| y_f(rep, i, f)).collect::<Result<Vec<_>, _>>()?;
    let m = elementary_symmetric(r, &ys).compose(&hecke_symmetrizer(n));
    let expr = involution_image(Involution::Cherednik, &m, n)?;
    certify(rep, expr, degree)
}
