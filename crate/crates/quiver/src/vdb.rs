//! Van den Bergh pairs, their group-valued moment maps, and fused moment
//! maps of framed quivers.

use serde_json::{json, Value};

use cyclodaha_core::{Field, Rational};

use crate::error::QuiverError;
use crate::mat::{inverse, one_plus, Mat};

/// `X: V → W` (a `dim W × dim V` matrix) and `Y: W → V`.
#[derive(Clone, Debug, PartialEq)]
pub struct VdBPair {
    pub x: Mat,
    pub y: Mat,
}

impl VdBPair {
    pub fn new(x: Mat, y: Mat) -> Result<VdBPair, QuiverError> {
        if x.rows() != y.cols() || x.cols() != y.rows() {
            return Err(QuiverError::Dimension(format!(
                "X is {}x{} but Y is {}x{}",
                x.rows(),
                x.cols(),
                y.rows(),
                y.cols()
            )));
        }
        let p = VdBPair { x, y };
        if one_plus(&(&p.x * &p.y)).det().is_zero() {
            return Err(QuiverError::SingularFactor("1 + XY".into()));
        }
        Ok(p)
    }

    /// The action of `(g, h) ∈ GL(V) × GL(W)`: `X ↦ hXg⁻¹`, `Y ↦ gYh⁻¹`.
    pub fn act(&self, g: &Mat, h: &Mat) -> Result<VdBPair, QuiverError> {
        let ginv = inverse(g, "g")?;
        let hinv = inverse(h, "h")?;
        Ok(VdBPair { x: &(h * &self.x) * &ginv, y: &(g * &self.y) * &hinv })
    }
}

/// `μ(X, Y) = ((1 + YX)⁻¹, 1 + XY)`.
pub fn vdb_moment(p: &VdBPair) -> Result<(Mat, Mat), QuiverError> {
    let first = inverse(&one_plus(&(&p.y * &p.x)), "1 + YX")?;
    Ok((first, one_plus(&(&p.x * &p.y))))
}

/// Whether `μ(g·p) = (gμ₁g⁻¹, hμ₂h⁻¹)` holds exactly.
pub fn vdb_equivariant(p: &VdBPair, g: &Mat, h: &Mat) -> Result<bool, QuiverError> {
    let (m1, m2) = vdb_moment(p)?;
    let (n1, n2) = vdb_moment(&p.act(g, h)?)?;
    let ginv = inverse(g, "g")?;
    let hinv = inverse(h, "h")?;
    Ok(n1 == &(g * &m1) * &ginv && n2 == &(h * &m2) * &hinv)
}

/// A quiver with dimension vector and one-dimensional framing pieces.
#[derive(Clone, Debug)]
pub struct FramedQuiver {
    pub dims: Vec<usize>,
    /// `(source, target)` for each arrow.
    pub arrows: Vec<(usize, usize)>,
    /// Number of framing lines at each vertex.
    pub framing: Vec<usize>,
}

/// An arrow of the doubled quiver: `Plain(h)` is `h`, `Star(h)` is `h*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalfArrow {
    Plain(usize),
    Star(usize),
}

/// Linear data on a framed quiver: `c[h]: V_s → V_t`, `cstar[h]: V_t → V_s`,
/// and at vertex `i` the pairs `a[i][j]: ℂ → V_i`, `b[i][j]: V_i → ℂ`.
#[derive(Clone, Debug)]
pub struct FramedData {
    pub c: Vec<Mat>,
    pub cstar: Vec<Mat>,
    pub a: Vec<Vec<Mat>>,
    pub b: Vec<Vec<Mat>>,
}

/// The default total order on the doubled arrows: all of `Q_1`, then all
/// starred arrows.
pub fn default_order(q: &FramedQuiver) -> Vec<HalfArrow> {
    (0..q.arrows.len()).map(HalfArrow::Plain).chain((0..q.arrows.len()).map(HalfArrow::Star)).collect()
}

/// The fused moment map: at vertex `i`,
/// `μ_i = Π^< (1 + C_h C_{h*})^{ε(h)} · Π_j (1 + a_{ij} b_{ij})` over doubled
/// arrows ending at `i` in the given order, `ε = +1` on `Q_1` and `−1` on
/// starred arrows; and `ν_{ij} = (1 + b_{ij} a_{ij})⁻¹`.
pub fn fusion_moment(
    q: &FramedQuiver,
    data: &FramedData,
    order: &[HalfArrow],
) -> Result<(Vec<Mat>, Vec<Vec<Rational>>), QuiverError> {
    let nv = q.dims.len();
    if data.c.len() != q.arrows.len() || data.cstar.len() != q.arrows.len() {
        return Err(QuiverError::Dimension("one C and one C* per arrow".into()));
    }
    for (h, &(s, t)) in q.arrows.iter().enumerate() {
        let (c, cs) = (&data.c[h], &data.cstar[h]);
        if c.rows() != q.dims[t] || c.cols() != q.dims[s] || cs.rows() != q.dims[s] || cs.cols() != q.dims[t] {
            return Err(QuiverError::Dimension(format!("arrow {h} has maps of the wrong shape")));
        }
    }
    let mut mu: Vec<Mat> = q.dims.iter().map(|&d| Mat::identity(d)).collect();
    for half in order {
        let (target, factor) = match *half {
            HalfArrow::Plain(h) => (q.arrows[h].1, one_plus(&(&data.c[h] * &data.cstar[h]))),
            HalfArrow::Star(h) => {
                let f = one_plus(&(&data.cstar[h] * &data.c[h]));
                (q.arrows[h].0, inverse(&f, &format!("1 + C_{h}* C_{h}"))?)
            }
        };
        mu[target] = &mu[target] * &factor;
    }
    let mut nu = Vec::with_capacity(nv);
    for i in 0..nv {
        let (a, b) = (&data.a[i], &data.b[i]);
        if a.len() != q.framing[i] || b.len() != q.framing[i] {
            return Err(QuiverError::Dimension(format!("vertex {i} needs {} framing pairs", q.framing[i])));
        }
        let mut nus = Vec::new();
        for (aj, bj) in a.iter().zip(b) {
            mu[i] = &mu[i] * &one_plus(&(aj * bj));
            let s = (bj * aj).get(0, 0).clone() + Rational::one();
            nus.push(s.inv().ok_or_else(|| QuiverError::SingularFactor(format!("1 + b a at vertex {i}")))?);
        }
        nu.push(nus);
    }
    Ok((mu, nu))
}

/// The rescaled framing `ã_j = (1 + a_1b_1)⋯(1 + a_{j−1}b_{j−1}) a_j`, `b̃_j = b_j`.
pub fn cell_framing(a: &[Mat], b: &[Mat]) -> Vec<Mat> {
    let n = a.first().map_or(0, Mat::rows);
    let mut prefix = Mat::identity(n);
    let mut out = Vec::with_capacity(a.len());
    for (aj, bj) in a.iter().zip(b) {
        out.push(&prefix * aj);
        prefix = &prefix * &one_plus(&(aj * bj));
    }
    out
}

/// Exact comparison of both sides of the telescoping identity
/// `1 + Σ ã_j b̃_j = (1 + a_1b_1)⋯(1 + a_ℓb_ℓ)` and of the leading principal
/// minors of `1 + b̃ã` against `Π_{j≤k}(1 + b_ja_j)`.
#[derive(Clone, Debug)]
pub struct CellReport {
    pub lhs: Mat,
    pub rhs: Mat,
    pub minors: Vec<Rational>,
    pub minor_products: Vec<Rational>,
}

impl CellReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs && self.minors == self.minor_products
    }

    pub fn to_json(&self) -> Value {
        json!({
            "holds": self.holds(),
            "telescoping": self.lhs == self.rhs,
            "minors": self.minors.iter().map(Field::to_json).collect::<Vec<_>>(),
            "minor_products": self.minor_products.iter().map(Field::to_json).collect::<Vec<_>>(),
        })
    }
}

/// `a_j` are `n × 1`, `b_j` are `1 × n`.
pub fn cell_telescoping(a: &[Mat], b: &[Mat]) -> Result<CellReport, QuiverError> {
    if a.len() != b.len() || a.is_empty() {
        return Err(QuiverError::Dimension("need ℓ ≥ 1 pairs (a_j, b_j)".into()));
    }
    let n = a[0].rows();
    if a.iter().any(|x| x.rows() != n || x.cols() != 1) || b.iter().any(|x| x.rows() != 1 || x.cols() != n) {
        return Err(QuiverError::Dimension("a_j must be n×1 and b_j must be 1×n".into()));
    }
    let at = cell_framing(a, b);
    let mut lhs = Mat::identity(n);
    for (x, y) in at.iter().zip(b) {
        lhs = &lhs + &(x * y);
    }
    let rhs = a.iter().zip(b).fold(Mat::identity(n), |acc, (x, y)| &acc * &one_plus(&(x * y)));
    let ell = a.len();
    let mut bt = b[0].clone();
    let mut atm = at[0].clone();
    for k in 1..ell {
        bt = bt.vstack(&b[k]);
        atm = atm.hstack(&at[k]);
    }
    let big = one_plus(&(&bt * &atm));
    let minors = (1..=ell).map(|k| big.block(0, k, 0, k).det()).collect();
    let mut acc = Rational::one();
    let minor_products = a
        .iter()
        .zip(b)
        .map(|(x, y)| {
            acc = acc.clone() * ((y * x).get(0, 0).clone() + Rational::one());
            acc.clone()
        })
        .collect();
    Ok(CellReport { lhs, rhs, minors, minor_products })
}
