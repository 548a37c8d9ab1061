use serde_json::{json, Value};

use crate::basis::GradedBasis;
use crate::conditions::QuasiField;

/// Truncated generating function `Σ_d dim_d t^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub coeffs: Vec<i64>,
}

impl HilbertSeries {
    pub fn new(coeffs: Vec<i64>) -> Self {
        HilbertSeries { coeffs }
    }

    /// Expansion of `numerator(t) / Π_k (1 − t^{den_k})` up to `t^{len−1}`.
    pub fn rational(numerator: &[i64], den: &[usize], len: usize) -> Self {
        let mut c = vec![0i64; len];
        for (k, &v) in numerator.iter().enumerate().take(len) {
            c[k] = v;
        }
        for &d in den {
            assert!(d > 0);
            // multiply by 1/(1 − t^d) = running sum with stride d
            for k in d..len {
                c[k] += c[k - d];
            }
        }
        HilbertSeries { coeffs: c }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, d: usize) -> i64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn truncate(&self, len: usize) -> Self {
        HilbertSeries { coeffs: self.coeffs.iter().copied().take(len).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let len = self.len().min(o.len());
        HilbertSeries { coeffs: (0..len).map(|k| self.coeffs[k] + o.coeffs[k]).collect() }
    }

    pub fn scale(&self, s: i64) -> Self {
        HilbertSeries { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Product, truncated to the shorter length.
    pub fn mul(&self, o: &Self) -> Self {
        let len = self.len().min(o.len());
        let mut c = vec![0i64; len];
        for (a, x) in self.coeffs.iter().enumerate().take(len) {
            for (b, y) in o.coeffs.iter().enumerate().take(len - a) {
                c[a + b] += x * y;
            }
        }
        HilbertSeries { coeffs: c }
    }

    /// Multiply by `t^k`, keeping the length.
    pub fn shift(&self, k: usize) -> Self {
        let mut c = vec![0i64; self.len()];
        for d in k..self.len() {
            c[d] = self.coeffs[d - k];
        }
        HilbertSeries { coeffs: c }
    }
}

pub fn hilbert<F: QuasiField>(b: &GradedBasis<F>) -> HilbertSeries {
    HilbertSeries::new(b.dims().into_iter().map(|d| d as i64).collect())
}

/// Coefficients of `h(t)·Π_{i=1}^N (1 − t^i)` and whether any is negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessReport {
    pub numerator: Vec<i64>,
    pub negative: bool,
}

/// The numerator up to `t^truncation`, clamped to the available terms.
pub fn freeness_numerator(series: &HilbertSeries, n: usize, truncation: usize) -> FreenessReport {
    let len = (truncation + 1).min(series.len());
    let mut c: Vec<i64> = series.coeffs[..len].to_vec();
    for i in 1..=n {
        for k in (i..len).rev() {
            c[k] -= c[k - i];
        }
    }
    let negative = c.iter().any(|&x| x < 0);
    FreenessReport { numerator: c, negative }
}

/// `{ "dims", "numerator", "free_flag" }` where `free_flag` is false exactly
/// when the numerator has a negative coefficient.
pub fn series_json(series: &HilbertSeries, n: usize) -> Value {
    let f = freeness_numerator(series, n, series.len().saturating_sub(1));
    json!({ "dims": series.coeffs, "numerator": f.numerator, "free_flag": !f.negative })
}
