//! Closed-form difference operators, evaluated through a common Vandermonde denominator.

use cyclodaha_core::{Field, LaurentPoly, Monomial};
use cyclodaha_ops::{Param, Rep};

use crate::error::MacError;

fn linear<F: Field>(n: usize, i: usize, c: &F, j: usize) -> LaurentPoly<F> {
    // X_i − c·X_j
    &LaurentPoly::var(n, i) - &LaurentPoly::var(n, j).scale(c)
}

/// `Σ_j Π_{i≠j} (X_i − tX_j)/(X_i − X_j) · g_j`, given `g_j` for each `j`.
/// Uses `1/Π_{i≠j}(X_i − X_j) = (−1)^{N−1−j} Δ_j / Δ` (0-based `j`), where `Δ` is the
/// Vandermonde product and `Δ_j` omits every factor involving `j`.
fn weighted_sum<F: Field>(n: usize, t: &F, g: &[LaurentPoly<F>]) -> Result<LaurentPoly<F>, MacError> {
    let one = F::one();
    let mut delta = LaurentPoly::one(n);
    for i in 0..n {
        for k in i + 1..n {
            delta = &delta * &linear(n, i, &one, k);
        }
    }
    let mut num = LaurentPoly::zero(n);
    for (j, gj) in g.iter().enumerate() {
        let mut term = gj.clone();
        for i in (0..n).filter(|&i| i != j) {
            term = &term * &linear(n, i, t, j);
        }
        for i in (0..n).filter(|&i| i != j) {
            for k in (i + 1..n).filter(|&k| k != j) {
                term = &term * &linear(n, i, &one, k);
            }
        }
        if (n - 1 - j) % 2 == 1 {
            term = term.scale(&-one.clone());
        }
        num = &num + &term;
    }
    Ok(num.exact_divide(&delta)?)
}

fn require_symmetric<F: Field>(p: &LaurentPoly<F>) -> Result<(), MacError> {
    if p.is_symmetric() {
        Ok(())
    } else {
        Err(MacError::InputNotSymmetric)
    }
}

/// `M = Σ_j Π_{i≠j} (X_i − tX_j)/(X_i − X_j) τ_j` at explicit `q`, `t`.
pub fn macdonald_m1_at<F: Field>(q: &F, t: &F, p: &LaurentPoly<F>) -> Result<LaurentPoly<F>, MacError> {
    require_symmetric(p)?;
    macdonald_m1_any_at(q, t, p)
}

/// The same difference operator applied to an arbitrary Laurent polynomial.
/// Fails with a divisibility error when the result is not a Laurent polynomial.
pub fn macdonald_m1_any_at<F: Field>(q: &F, t: &F, p: &LaurentPoly<F>) -> Result<LaurentPoly<F>, MacError> {
    let n = p.nvars();
    let g = (0..n).map(|j| p.scale_var(j, q)).collect::<Result<Vec<_>, _>>()?;
    weighted_sum(n, t, &g)
}

/// `M_1^{(1)} = Σ_j Π_{i≠j} (X_i − tX_j)/(X_i − X_j) · X_j⁻¹(τ_j − 1)` at explicit `q`, `t`.
pub fn m1_l1_at<F: Field>(q: &F, t: &F, p: &LaurentPoly<F>) -> Result<LaurentPoly<F>, MacError> {
    require_symmetric(p)?;
    let n = p.nvars();
    let mut g = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![0; n];
        e[j] = -1;
        g.push((&p.scale_var(j, q)? - p).shift(&Monomial(e)));
    }
    weighted_sum(n, t, &g)
}

fn q_and_t<F: Field>(rep: &Rep<F>) -> Result<(F, F), MacError> {
    let q = rep.get(Param::Q)?.clone();
    let tt = rep.get(Param::Tt)?.clone();
    Ok((q, tt.clone() * &tt))
}

/// [`macdonald_m1_at`] with `q` and `t = 𝐭²` taken from a DAHA representation.
pub fn macdonald_m1<F: Field>(rep: &Rep<F>, p: &LaurentPoly<F>) -> Result<LaurentPoly<F>, MacError> {
    let (q, t) = q_and_t(rep)?;
    macdonald_m1_at(&q, &t, p)
}

/// [`m1_l1_at`] with `q` and `t = 𝐭²` taken from a DAHA representation.
pub fn m1_l1<F: Field>(rep: &Rep<F>, p: &LaurentPoly<F>) -> Result<LaurentPoly<F>, MacError> {
    let (q, t) = q_and_t(rep)?;
    m1_l1_at(&q, &t, p)
}

fn partitions(d: usize, parts: usize, max: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>) {
    if d == 0 {
        out.push(cur.clone());
        return;
    }
    if parts == 0 {
        return;
    }
    for k in (1..=d.min(max)).rev() {
        cur.push(k);
        partitions(d - k, parts - 1, k, out, cur);
        cur.pop();
    }
}

/// Monomial symmetric polynomials `m_λ` for all partitions `λ` with at most `n`
/// parts and `|λ| ≤ maxdeg`, in increasing degree.
pub fn symmetric_basis<F: Field>(n: usize, maxdeg: usize) -> Vec<LaurentPoly<F>> {
    let mut out = Vec::new();
    for d in 0..=maxdeg {
        let mut ps = Vec::new();
        partitions(d, n, d, &mut ps, &mut Vec::new());
        for lam in ps {
            let mut e = vec![0i32; n];
            for (i, &k) in lam.iter().enumerate() {
                e[i] = k as i32;
            }
            let m: LaurentPoly<F> = LaurentPoly::monomial(Monomial(e)).symmetrize();
            // clear the orbit-size normalization so each exponent has coefficient 1
            let lead = m.terms().next().map(|(_, c)| c.clone()).expect("nonzero");
            out.push(m.scale(&lead.inv().expect("nonzero")));
        }
    }
    out
}
