//! Recurring words in the Hecke generators.

use cyclodaha_ops::expr::build::*;
use cyclodaha_ops::{Gen, OperatorExpr};

/// `T_a T_{a±1} … T_b` (inverses when `inv`), stepping towards `b`; empty when the range is empty.
pub fn t_run(a: usize, b: usize, inv: bool) -> Vec<Gen> {
    let mk = |i| if inv { Gen::Tinv(i) } else { Gen::T(i) };
    if a == 0 || b == 0 {
        return Vec::new();
    }
    if a <= b {
        (a..=b).map(mk).collect()
    } else {
        (b..=a).rev().map(mk).collect()
    }
}

/// `T_{j−1}^{e}…T_{i+1}^{e} T_i^{2c} T_{i+1}^{−e}…T_{j−1}^{−e}` with `e = ±1`:
/// `outer_inv` selects the sign of the left run, `centre_inv` that of `T_i²`.
pub fn conj_square(i: usize, j: usize, outer_inv: bool, centre_inv: bool) -> OperatorExpr {
    let mut v = if j > i + 1 { t_run(j - 1, i + 1, outer_inv) } else { Vec::new() };
    let c = if centre_inv { Gen::Tinv(i) } else { Gen::T(i) };
    v.push(c);
    v.push(c);
    if j > i + 1 {
        v.extend(t_run(i + 1, j - 1, !outer_inv));
    }
    w(&v)
}

/// `T_{j−1}^{e}…T_{i+1}^{e} T_i^{e} T_{i+1}^{e}…T_{j−1}^{e}`, a palindrome of one sign.
pub fn palindrome(i: usize, j: usize, inv: bool) -> OperatorExpr {
    let mut v = if j > i + 1 { t_run(j - 1, i + 1, inv) } else { Vec::new() };
    v.extend(t_run(i, j - 1, inv));
    w(&v)
}

/// `A_i = T_{i−1}⁻¹…T_2⁻¹ T_1⁻² T_2⁻¹…T_{i−1}⁻¹`; the identity for `i = 1`.
pub fn a_word(i: usize) -> OperatorExpr {
    if i == 1 {
        return OperatorExpr::one();
    }
    let mut v = t_run(i - 1, 1, true);
    v.extend(t_run(1, i - 1, true));
    w(&v)
}

/// `A_i` with every letter inverted: `T_{i−1}…T_1²…T_{i−1}`.
pub fn a_word_inv(i: usize) -> OperatorExpr {
    if i == 1 {
        return OperatorExpr::one();
    }
    let mut v = t_run(i - 1, 1, false);
    v.extend(t_run(1, i - 1, false));
    w(&v)
}

/// `B_i = T_i…T_{N−2} T_{N−1}² T_{N−2}…T_i`; the identity for `i = N`.
pub fn b_word(i: usize, n: usize) -> OperatorExpr {
    if i >= n {
        return OperatorExpr::one();
    }
    let mut v = t_run(i, n - 1, false);
    v.extend(t_run(n - 1, i, false));
    w(&v)
}

/// Jucys–Murphy element `J_N = T_1…T_{N−1}²…T_1 = B_1`.
pub fn jucys_murphy(n: usize) -> OperatorExpr {
    b_word(1, n)
}

/// `T_0 = T_1⁻¹…T_{N−1}⁻¹…T_1⁻¹ X_1⁻¹ X_N`.
pub fn t0(n: usize) -> OperatorExpr {
    let mut v = t_run(1, n - 1, true);
    if n > 2 {
        v.extend(t_run(n - 2, 1, true));
    }
    v.push(Gen::Xinv(1));
    v.push(Gen::X(n));
    w(&v)
}

/// Degenerate affine reflection `s_0 = X_N⁻¹ X_1 s_{1N}`.
pub fn s0(n: usize) -> OperatorExpr {
    w(&[Gen::Xinv(n), Gen::X(1), Gen::Sij(1, n)])
}

/// `s_i` for `0 ≤ i ≤ N−1`, with `s_0` expanded.
pub fn s_aff(i: usize, n: usize) -> OperatorExpr {
    if i % n == 0 {
        s0(n)
    } else {
        g(Gen::S(i % n))
    }
}
