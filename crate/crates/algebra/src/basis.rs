//! PBW-type monomials and exact independence checks through the polynomial representation.

use std::collections::BTreeMap;

use itertools::Itertools;

use cyclodaha_core::{Field, LaurentPoly, Matrix, Monomial};
use cyclodaha_ops::{apply_expr, Gen, OperatorExpr, OpsError, Rep};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisShape {
    /// `X^a y^b w D^c` with `w ∈ S_N` and every `b_i ≤ l − 1`, degenerate family.
    MxMySMd,
    /// `X^a D^c` where each index carries `X_i` or `D_i` but not both.
    MxMdMissing,
    /// `X^a Y^b T_w D^c` with every `b_i ≤ l − 1`, DAHA family.
    MxMyTsMd,
}

/// Per-variable maximal exponents of each letter block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeCaps {
    pub x: u32,
    pub y: u32,
    pub d: u32,
}

impl DegreeCaps {
    pub fn uniform(c: u32) -> Self {
        DegreeCaps { x: c, y: c, d: c }
    }
}

#[derive(Clone, Debug)]
pub struct BasisElement {
    pub expr: OperatorExpr,
    /// For [`BasisShape::MxMdMissing`]: `m_i = p` for `X_i^p` and `m_i = −p` for `D_i^p`.
    /// Otherwise the concatenated exponent vectors `(a, b, c)` followed by the permutation.
    pub label: Vec<i32>,
}

/// All permutations of `1..=n` in lexicographic order, each with a reduced word
/// in the adjacent transpositions (indices `1..n`), obtained by bubble sort.
pub fn permutations_with_reduced_words(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    (1..=n)
        .permutations(n)
        .map(|perm| {
            let mut a = perm.clone();
            let mut swaps = Vec::new();
            for pass in 0..n {
                for j in 0..n.saturating_sub(1 + pass) {
                    if a[j] > a[j + 1] {
                        a.swap(j, j + 1);
                        swaps.push(j + 1);
                    }
                }
            }
            swaps.reverse();
            (perm, swaps)
        })
        .collect()
}

fn power_word(letter: impl Fn(usize) -> Gen, exps: &[u32]) -> Vec<Gen> {
    let mut v = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        for _ in 0..e {
            v.push(letter(i + 1));
        }
    }
    v
}

fn exponent_vectors(n: usize, cap: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    (0..n).map(|_| 0..=cap).multi_cartesian_product().collect()
}

/// A letter block of a PBW monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    X,
    Y,
    Group,
    D,
}

/// The order in which blocks are written, left to right.
pub const STANDARD_ORDER: [Block; 4] = [Block::X, Block::Y, Block::Group, Block::D];

/// Enumerate the monomials of `shape` for rank `n`, level `l` within `caps`.
pub fn basis_monomials(shape: BasisShape, n: usize, l: usize, caps: DegreeCaps) -> Vec<BasisElement> {
    basis_monomials_ordered(shape, n, l, caps, STANDARD_ORDER)
}

/// As [`basis_monomials`] with the blocks written in `order` (a permutation of the four blocks).
/// The order is ignored for [`BasisShape::MxMdMissing`].
pub fn basis_monomials_ordered(
    shape: BasisShape,
    n: usize,
    l: usize,
    caps: DegreeCaps,
    order: [Block; 4],
) -> Vec<BasisElement> {
    let mut out = Vec::new();
    match shape {
        BasisShape::MxMdMissing => {
            let range = -(caps.d as i32)..=(caps.x as i32);
            let labels: Vec<Vec<i32>> =
                if n == 0 { vec![vec![]] } else { (0..n).map(|_| range.clone()).multi_cartesian_product().collect() };
            for m in labels {
                let xs: Vec<u32> = m.iter().map(|&v| v.max(0) as u32).collect();
                let ds: Vec<u32> = m.iter().map(|&v| (-v).max(0) as u32).collect();
                let mut wd = power_word(Gen::X, &xs);
                wd.extend(power_word(Gen::Dl, &ds));
                out.push(BasisElement { expr: OperatorExpr::word(wd), label: m });
            }
        }
        BasisShape::MxMySMd | BasisShape::MxMyTsMd => {
            let ycap = caps.y.min(l.saturating_sub(1) as u32);
            let perms = permutations_with_reduced_words(n);
            let group_letter = |i: usize| if shape == BasisShape::MxMySMd { Gen::S(i) } else { Gen::T(i) };
            let y_letter = |i: usize| if shape == BasisShape::MxMySMd { Gen::Ylow(i) } else { Gen::Y(i) };
            for a in exponent_vectors(n, caps.x) {
                for b in exponent_vectors(n, ycap) {
                    for (perm, red) in &perms {
                        for d in exponent_vectors(n, caps.d) {
                            let mut wd = Vec::new();
                            for blk in order {
                                match blk {
                                    Block::X => wd.extend(power_word(Gen::X, &a)),
                                    Block::Y => wd.extend(power_word(y_letter, &b)),
                                    Block::Group => wd.extend(red.iter().map(|&i| group_letter(i))),
                                    Block::D => wd.extend(power_word(Gen::Dl, &d)),
                                }
                            }
                            let mut label: Vec<i32> = a.iter().chain(&b).chain(&d).map(|&e| e as i32).collect();
                            label.extend(perm.iter().map(|&p| p as i32));
                            out.push(BasisElement { expr: OperatorExpr::word(wd), label });
                        }
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub operators: usize,
    pub columns: usize,
    pub rank: usize,
}

impl RankReport {
    pub fn full_rank(&self) -> bool {
        self.rank == self.operators
    }
}

/// Rank of the evaluation matrix whose row `k` lists the coefficients of
/// `ops[k]·probe` over every (probe, output monomial) pair.
pub fn independence_check<F: Field>(
    rep: &Rep<F>,
    ops: &[OperatorExpr],
    probes: &[LaurentPoly<F>],
) -> Result<RankReport, OpsError> {
    let images: Vec<Vec<LaurentPoly<F>>> = ops
        .iter()
        .map(|e| probes.iter().map(|p| apply_expr(rep, e, p)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<_, _>>()?;
    let mut cols: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    for row in &images {
        for (k, img) in row.iter().enumerate() {
            for (m, _) in img.terms() {
                let next = cols.len();
                cols.entry((k, m.clone())).or_insert(next);
            }
        }
    }
    let mut mat = Matrix::zeros(ops.len(), cols.len());
    for (r, row) in images.iter().enumerate() {
        for (k, img) in row.iter().enumerate() {
            for (m, c) in img.terms() {
                mat.set(r, cols[&(k, m.clone())], c.clone());
            }
        }
    }
    Ok(RankReport { operators: ops.len(), columns: cols.len(), rank: mat.rank() })
}

/// All polynomial monomials with total degree at most `d`.
pub fn probe_monomials<F: Field>(n: usize, d: i32) -> Vec<LaurentPoly<F>> {
    cyclodaha_core::laurent::box_monomials(n, d)
        .into_iter()
        .filter(|m| m.is_polynomial() && m.degree() <= d as i64)
        .map(LaurentPoly::monomial)
        .collect()
}
