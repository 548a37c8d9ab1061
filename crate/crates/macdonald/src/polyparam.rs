use cyclodaha_core::Rational;
use cyclodaha_ops::expr::build::*;
use cyclodaha_ops::{Coef, Gen, OperatorExpr, Param};

/// A one-variable polynomial `f(X) = Σ_k a_k X^k` with symbolic coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyParam {
    /// Low degree first.
    pub coeffs: Vec<Coef>,
}

impl PolyParam {
    pub fn new(coeffs: Vec<Coef>) -> Self {
        let mut p = PolyParam { coeffs };
        while p.coeffs.last().is_some_and(Coef::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn one() -> Self {
        PolyParam::new(vec![Coef::one()])
    }

    pub fn from_rationals(cs: &[Rational]) -> Self {
        PolyParam::new(cs.iter().cloned().map(Coef::rational).collect())
    }

    /// `(X − r_1)…(X − r_m)`.
    pub fn from_roots(roots: &[Coef]) -> Self {
        let mut cs = vec![Coef::one()];
        for r in roots {
            let mut next = vec![Coef::zero(); cs.len() + 1];
            for (k, c) in cs.iter().enumerate() {
                next[k + 1] = next[k + 1].add(c);
                next[k] = next[k].sub(&c.mul(r));
            }
            cs = next;
        }
        PolyParam::new(cs)
    }

    /// `(X − Z_1)…(X − Z_l)` in the representation's `Z` parameters.
    pub fn cyclotomic(l: usize) -> Self {
        PolyParam::from_roots(&(1..=l).map(|i| Coef::param(Param::Z(i))).collect::<Vec<_>>())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// `f(g)` for an operator `g`, as `Σ a_k g^k`.
    pub fn at(&self, x: &OperatorExpr) -> OperatorExpr {
        let mut acc = OperatorExpr::zero();
        let mut pw = OperatorExpr::one();
        for a in &self.coeffs {
            acc = acc.add(&pw.scale(a));
            pw = pw.compose(x);
        }
        acc
    }

    /// `f(X_1⁻¹)`.
    pub fn at_x1_inverse(&self) -> OperatorExpr {
        self.at(&g(Gen::Xinv(1)))
    }
}
