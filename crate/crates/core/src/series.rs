use crate::field::Field;
use crate::laurent::{LaurentPoly, Monomial};
use crate::rational::Rational;

/// Generalised binomial coefficient `C(a, r) = a(a−1)⋯(a−r+1)/r!`.
pub fn generalized_binomial(a: &Rational, r: usize) -> Rational {
    let mut acc = Rational::one();
    for k in 0..r {
        acc = acc * (a - &Rational::from_i64(k as i64)) / Rational::from_i64(k as i64 + 1);
    }
    acc
}

/// Coefficients of `(1+u)^a` up to `u^k`.
pub fn binomial_series(a: &Rational, k: usize) -> Vec<Rational> {
    (0..=k).map(|r| generalized_binomial(a, r)).collect()
}

/// Element of `LaurentPoly[u]/(u^{K+1})`.
#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<F> {
    order: usize,
    coeffs: Vec<LaurentPoly<F>>,
}

impl<F: Field> TruncatedSeries<F> {
    pub fn zero(n: usize, order: usize) -> Self {
        TruncatedSeries { order, coeffs: vec![LaurentPoly::zero(n); order + 1] }
    }

    pub fn from_coeffs(order: usize, mut coeffs: Vec<LaurentPoly<F>>, n: usize) -> Self {
        coeffs.resize(order + 1, LaurentPoly::zero(n));
        coeffs.truncate(order + 1);
        TruncatedSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `u^r`.
    pub fn coeff(&self, r: usize) -> &LaurentPoly<F> {
        &self.coeffs[r]
    }

    pub fn coeffs(&self) -> &[LaurentPoly<F>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.order, o.order);
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.order, o.order);
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.order, o.order);
        let n = self.coeffs[0].nvars();
        let mut out = Self::zero(n, self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(self.order + 1 - i) {
                out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
            }
        }
        out
    }

    /// Multiply by a scalar power series `Σ s_r u^r`.
    pub fn mul_scalar_series(&self, s: &[F]) -> Self {
        let n = self.coeffs[0].nvars();
        let mut out = Self::zero(n, self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, c) in s.iter().enumerate().take(self.order + 1 - i) {
                out.coeffs[i + j].add_scaled(a, c);
            }
        }
        out
    }

    /// Value at `u = 0`.
    pub fn constant_term(&self) -> &LaurentPoly<F> {
        &self.coeffs[0]
    }

    /// Lowest `r` with a nonzero coefficient, or `None` if the series is zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

impl<F: Field> std::fmt::Debug for TruncatedSeries<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

/// Expand `p` under `X_j ↦ c·X_i(1+u)` truncated at `u^k`.
pub fn expand_scaled<F: Field>(p: &LaurentPoly<F>, i: usize, j: usize, c: &F, k: usize) -> TruncatedSeries<F> {
    assert!(i != j);
    let n = p.nvars();
    let mut out = TruncatedSeries::zero(n, k);
    for (e, coef) in p.terms() {
        let a = e.0[j];
        let mut m: Monomial = e.clone();
        m.0[i] += a;
        m.0[j] = 0;
        let base = coef.clone() * &c.pow(a as i64).expect("invertible scale");
        let ar = Rational::from_i64(a as i64);
        for (r, b) in binomial_series(&ar, k).into_iter().enumerate() {
            if !b.is_zero() {
                out.coeffs[r].add_term(m.clone(), base.clone() * &F::from_rational(&b));
            }
        }
    }
    out
}

/// Expand `p` under `X_j ↦ X_i(1+u)` truncated at `u^k`.
pub fn series_expand_on_hyperplane<F: Field>(p: &LaurentPoly<F>, i: usize, j: usize, k: usize) -> TruncatedSeries<F> {
    expand_scaled(p, i, j, &F::one(), k)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly<Rational>;

    #[test]
    fn binomials() {
        assert_eq!(generalized_binomial(&Rational::from_i64(5), 2), Rational::from_i64(10));
        assert_eq!(generalized_binomial(&Rational::from_i64(-1), 3), Rational::from_i64(-1));
        assert_eq!(generalized_binomial(&Rational::new(1, 2), 2), Rational::new(-1, 8));
    }

    #[test]
    fn expansion_examples() {
        let (x1, x2) = (P::var(2, 0), P::var(2, 1));
        let s = series_expand_on_hyperplane(&(&x1 - &x2), 0, 1, 2);
        assert!(s.coeff(0).is_zero());
        assert_eq!(s.coeff(1), &(-&x1));
        assert!(s.coeff(2).is_zero());
        let d = &x1 - &x2;
        let s = series_expand_on_hyperplane(&(&d * &d), 0, 1, 3);
        assert_eq!(s.valuation(), Some(2));
        assert_eq!(s.coeff(2), &(&x1 * &x1));
        assert!(s.coeff(3).is_zero());
        let s = series_expand_on_hyperplane(&x2.pow(3), 0, 1, 2);
        let x13 = x1.pow(3);
        assert_eq!(s.coeffs(), &[x13.clone(), x13.scale(&Rational::from_i64(3)), x13.scale(&Rational::from_i64(3))]);
    }
}
