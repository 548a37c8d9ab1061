//! Quadruples `(X, D, Y, T)` and the map from quiver points to them.

use serde_json::{json, Value};

use cyclodaha_core::{Field, Rational};

use crate::error::QuiverError;
use crate::mat::{self, inverse, minus_scalar, Mat};
use crate::point::{check_point, QuiverPoint, TClass};

#[derive(Clone, Debug, PartialEq)]
pub struct Quadruple {
    pub n: usize,
    pub z: Vec<Rational>,
    pub t: Rational,
    pub x: Mat,
    pub d: Mat,
    pub y: Mat,
    pub tmat: Mat,
}

/// Residuals of the four defining equations of a quadruple.
#[derive(Clone, Debug)]
pub struct QuadrupleReport {
    /// `XD − Π(Z_i⁻¹Y − 1)`.
    pub xd: Mat,
    /// `DX − Π(Z_i⁻¹YT − 1)`.
    pub dx: Mat,
    /// `YX − XYT`.
    pub yx: Mat,
    /// `YTD − DY`.
    pub ytd: Mat,
    pub y_invertible: bool,
}

impl QuadrupleReport {
    pub fn certified(&self) -> bool {
        self.y_invertible && [&self.xd, &self.dx, &self.yx, &self.ytd].iter().all(|m| m.is_zero())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "certified": self.certified(),
            "y_invertible": self.y_invertible,
            "xd_residual": self.xd.to_json(),
            "dx_residual": self.dx.to_json(),
            "yx_residual": self.yx.to_json(),
            "ytd_residual": self.ytd.to_json(),
        })
    }
}

/// `Π_i (c_i⁻¹ M − 1)` over the listed scalars, in order.
fn shifted_product(m: &Mat, z: &[Rational]) -> Mat {
    let mut acc = Mat::identity(m.rows());
    for zi in z {
        let f = minus_scalar(&m.scale(&zi.inv().expect("Z_i nonzero")), &Rational::one());
        acc = &acc * &f;
    }
    acc
}

/// `Π_i (M − c_i)`.
fn root_product(m: &Mat, z: &[Rational]) -> Mat {
    z.iter().fold(Mat::identity(m.rows()), |acc, zi| &acc * &minus_scalar(m, zi))
}

impl Quadruple {
    pub fn yt(&self) -> Mat {
        &self.y * &self.tmat
    }

    pub fn t_class(&self) -> TClass {
        TClass::of(&self.tmat, &self.t)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "N": self.n,
            "Z": self.z.iter().map(Field::to_json).collect::<Vec<_>>(),
            "t": self.t.to_json(),
            "X": self.x.to_json(),
            "D": self.d.to_json(),
            "Y": self.y.to_json(),
            "T": self.tmat.to_json(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Quadruple, QuiverError> {
        let n = mat::usize_field(v, "N")?;
        let z = mat::scalars_field(v, "Z")?;
        let t = mat::scalar_field(v, "t")?;
        let get = |k: &str| mat::matrix_value(mat::field(v, k)?, n, n, k);
        Ok(Quadruple { n, z, t, x: get("X")?, d: get("D")?, y: get("Y")?, tmat: get("T")? })
    }
}

pub fn check_quadruple(q: &Quadruple) -> QuadrupleReport {
    let yt = q.yt();
    QuadrupleReport {
        xd: &(&q.x * &q.d) - &shifted_product(&q.y, &q.z),
        dx: &(&q.d * &q.x) - &shifted_product(&yt, &q.z),
        yx: &(&q.y * &q.x) - &(&q.x * &yt),
        ytd: &(&yt * &q.d) - &(&q.d * &q.y),
        y_invertible: !q.y.det().is_zero(),
    }
}

/// `L_± − Π(·−Z_i)` for `L_+ = Z_1⋯Z_l·XD` against `Y` and
/// `L_− = Z_1⋯Z_l·DX` against `YT`.
pub fn product_formula_residuals(q: &Quadruple) -> (Mat, Mat) {
    let zprod = q.z.iter().fold(Rational::one(), |a, z| a * z);
    let lplus = (&q.x * &q.d).scale(&zprod);
    let lminus = (&q.d * &q.x).scale(&zprod);
    (&lplus - &root_product(&q.y, &q.z), &lminus - &root_product(&q.yt(), &q.z))
}

/// `X = X_1⋯X_l`, `D = D_l⋯D_1`, `Y = Z_1(1+X_1D_1)`, with `T` carried over.
/// The quadruple equations are checked as a postcondition.
pub fn psi(p: &QuiverPoint) -> Result<Quadruple, QuiverError> {
    let report = check_point(p)?;
    if !report.certified() {
        return Err(QuiverError::Uncertified("quiver relations have nonzero residuals".into()));
    }
    let x = p.x.iter().fold(Mat::identity(p.n), |acc, m| &acc * m);
    let d = p.d.iter().rev().fold(Mat::identity(p.n), |acc, m| &acc * m);
    let q = Quadruple { n: p.n, z: p.z.clone(), t: p.t.clone(), x, d, y: p.y(), tmat: p.tmat.clone() };
    if !check_quadruple(&q).certified() {
        return Err(QuiverError::Inconsistent("image of a certified point violates the quadruple equations".into()));
    }
    Ok(q)
}

/// On the open locus where `X` is invertible: `X_i = 1` for `i < l`,
/// `X_l = X`, `D_i = Z_i⁻¹Y − 1` for `i < l` and `D_l = X⁻¹(Z_l⁻¹Y − 1)`.
/// The result is re-certified and `ψ` of it is checked to return `q`.
pub fn lift_open_locus(q: &Quadruple) -> Result<QuiverPoint, QuiverError> {
    if !check_quadruple(q).certified() {
        return Err(QuiverError::Uncertified("quadruple equations have nonzero residuals".into()));
    }
    let l = q.z.len();
    let xinv = q.x.inverse().ok_or(QuiverError::XNotInvertible)?;
    let n = q.n;
    let mut x = vec![Mat::identity(n); l];
    x[l - 1] = q.x.clone();
    let mut d: Vec<Mat> =
        q.z.iter().map(|zi| minus_scalar(&q.y.scale(&zi.inv().expect("Z_i nonzero")), &Rational::one())).collect();
    d[l - 1] = &xinv * &d[l - 1];
    let p = QuiverPoint { l, n, z: q.z.clone(), t: q.t.clone(), x, d, tmat: q.tmat.clone() };
    if !check_point(&p)?.certified() {
        return Err(QuiverError::Inconsistent("lifted point violates the quiver relations".into()));
    }
    if psi(&p)? != *q {
        return Err(QuiverError::Inconsistent("psi of the lift differs from the input".into()));
    }
    Ok(p)
}

/// When every `X_i` of `p` is invertible, the vertex isomorphisms
/// `g_1 = 1`, `g_{i+1} = g_i X_i` carrying `p` onto `lift_open_locus(ψ(p))`.
/// Returns the `g_i` after checking `g_i X_i = X'_i g_{i+1}` and
/// `g_{i+1} D_i = D'_i g_i` for all arrows.
pub fn lift_intertwiner(p: &QuiverPoint, lifted: &QuiverPoint) -> Result<Vec<Mat>, QuiverError> {
    let mut g = vec![Mat::identity(p.n)];
    for i in 0..p.l - 1 {
        let next = &g[i] * &p.x[i];
        g.push(next);
    }
    for gi in &g {
        inverse(gi, "vertex isomorphism")?;
    }
    for i in 0..p.l {
        let gi = &g[i];
        let gnext = &g[(i + 1) % p.l];
        if &(gi * &p.x[i]) != &(&lifted.x[i] * gnext) || &(gnext * &p.d[i]) != &(&lifted.d[i] * gi) {
            return Err(QuiverError::Inconsistent(format!("vertex maps do not intertwine arrow {}", i + 1)));
        }
    }
    Ok(g)
}
