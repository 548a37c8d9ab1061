//! Points of the multiplicative quiver variety of the cyclic quiver with a
//! Calogero-Moser vertex: maps `X_i: V_{i+1} → V_i`, `D_i: V_i → V_{i+1}`
//! (indices mod `l`) on `N`-dimensional spaces, together with the operator
//! `T` on `V_1` that closes the cycle.

use serde_json::{json, Value};

use cyclodaha_core::{Field, Rational, SeedStream};

use crate::error::QuiverError;
use crate::mat::{self, inverse, minus_scalar, one_plus, random_invertible, random_matrix, Mat};

#[derive(Clone, Debug, PartialEq)]
pub struct QuiverPoint {
    pub l: usize,
    pub n: usize,
    pub z: Vec<Rational>,
    pub t: Rational,
    pub x: Vec<Mat>,
    pub d: Vec<Mat>,
    /// The closing operator on `V_1`.
    pub tmat: Mat,
}

/// Where `T` sits relative to the conjugacy class of
/// `diag(t⁻¹, …, t⁻¹, t^{N−1})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TClass {
    Special,
    Other,
}

impl TClass {
    pub fn of(tmat: &Mat, t: &Rational) -> TClass {
        let n = tmat.rows();
        let tinv = t.inv().expect("t is nonzero");
        let shifted = minus_scalar(tmat, &tinv);
        let in_class = tmat.det().is_one()
            && shifted.rank() <= 1
            && (!t.pow(n as i64).expect("nonzero").is_one() || shifted.is_zero());
        if in_class {
            TClass::Special
        } else {
            TClass::Other
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TClass::Special => "special",
            TClass::Other => "other",
        }
    }
}

/// Exact residuals of both relation families.
#[derive(Clone, Debug)]
pub struct PointReport {
    /// `Z_i(1+X_iD_i) − Z_{i−1}(1+D_{i−1}X_{i−1})` for `i = 2..=l`.
    pub rela1: Vec<Mat>,
    /// `Z_1(1+X_1D_1)T − Z_l(1+D_lX_l)`.
    pub rela2: Mat,
    pub t_class: TClass,
}

impl PointReport {
    pub fn certified(&self) -> bool {
        self.rela1.iter().all(Mat::is_zero) && self.rela2.is_zero()
    }

    pub fn to_json(&self) -> Value {
        let nonzero = |m: &Mat| m.entries().iter().filter(|x| !x.is_zero()).count();
        json!({
            "certified": self.certified(),
            "rela1_nonzero_entries": self.rela1.iter().map(nonzero).collect::<Vec<_>>(),
            "rela1_residuals": mat::mats_to_json(&self.rela1),
            "rela2_nonzero_entries": nonzero(&self.rela2),
            "rela2_residual": self.rela2.to_json(),
            "t_class": self.t_class.name(),
        })
    }
}

impl QuiverPoint {
    /// The closing relation solved for `T`: `(Z_1(1+X_1D_1))⁻¹ Z_l(1+D_lX_l)`.
    pub fn derive_t(l: usize, z: &[Rational], x: &[Mat], d: &[Mat]) -> Result<Mat, QuiverError> {
        let y = one_plus(&(&x[0] * &d[0])).scale(&z[0]);
        let yinv = inverse(&y, "1 + X_1 D_1")?;
        let rhs = one_plus(&(&d[l - 1] * &x[l - 1])).scale(&z[l - 1]);
        Ok(&yinv * &rhs)
    }

    pub fn y(&self) -> Mat {
        one_plus(&(&self.x[0] * &self.d[0])).scale(&self.z[0])
    }

    fn validate_shape(&self) -> Result<(), QuiverError> {
        if self.l == 0 {
            return Err(QuiverError::Dimension("l must be at least 1".into()));
        }
        if self.z.len() != self.l || self.x.len() != self.l || self.d.len() != self.l {
            return Err(QuiverError::Dimension(format!("expected {} of each of Z, X, D", self.l)));
        }
        let square = |m: &Mat| m.rows() == self.n && m.cols() == self.n;
        if !self.x.iter().chain(&self.d).chain(std::iter::once(&self.tmat)).all(square) {
            return Err(QuiverError::Dimension(format!("all matrices must be {0}x{0}", self.n)));
        }
        Ok(())
    }

    /// A copy with one entry of `X_i` increased by one.
    pub fn bumped(&self, i: usize, r: usize, c: usize) -> QuiverPoint {
        let mut p = self.clone();
        let v = p.x[i].get(r, c).clone() + Rational::one();
        p.x[i].set(r, c, v);
        p
    }

    pub fn to_json(&self) -> Value {
        json!({
            "l": self.l,
            "N": self.n,
            "Z": self.z.iter().map(Field::to_json).collect::<Vec<_>>(),
            "t": self.t.to_json(),
            "X": mat::mats_to_json(&self.x),
            "D": mat::mats_to_json(&self.d),
            "T": self.tmat.to_json(),
        })
    }

    /// Parse `{l, N, Z, t, X, D}` with an optional `T`; when `T` is absent it
    /// is solved from the closing relation.
    pub fn from_json(v: &Value) -> Result<QuiverPoint, QuiverError> {
        let l = mat::usize_field(v, "l")?;
        let n = mat::usize_field(v, "N")?;
        let z = mat::scalars_field(v, "Z")?;
        let t = mat::scalar_field(v, "t")?;
        if z.len() != l || l == 0 {
            return Err(QuiverError::Dimension(format!("Z must have l = {l} ≥ 1 entries")));
        }
        let x = mat::matrix_list(v, "X", l, n)?;
        let d = mat::matrix_list(v, "D", l, n)?;
        let tmat = match v.get("T") {
            Some(tv) => mat::matrix_value(tv, n, n, "T")?,
            None => Self::derive_t(l, &z, &x, &d)?,
        };
        Ok(QuiverPoint { l, n, z, t, x, d, tmat })
    }
}

/// Residuals of both relation families. Never fails on well-shaped input.
pub fn check_point(p: &QuiverPoint) -> Result<PointReport, QuiverError> {
    p.validate_shape()?;
    let l = p.l;
    let rela1 = (1..l)
        .map(|i| {
            let lhs = one_plus(&(&p.x[i] * &p.d[i])).scale(&p.z[i]);
            let rhs = one_plus(&(&p.d[i - 1] * &p.x[i - 1])).scale(&p.z[i - 1]);
            &lhs - &rhs
        })
        .collect();
    let lhs = &p.y() * &p.tmat;
    let rhs = one_plus(&(&p.d[l - 1] * &p.x[l - 1])).scale(&p.z[l - 1]);
    Ok(PointReport { rela1, rela2: &lhs - &rhs, t_class: TClass::of(&p.tmat, &p.t) })
}

const MAX_ATTEMPTS: usize = 1000;

/// A certified point built by solving the relations forward from random
/// invertible `X_i` and a random `D_1`:
/// `D_i = X_i⁻¹(Z_{i−1}Z_i⁻¹(1+D_{i−1}X_{i−1}) − 1)`, and `T` from the
/// closing relation. The class of `T` is whatever it turns out to be.
pub fn sample_chain(l: usize, n: usize, z: &[Rational], t: &Rational, seed: u64) -> Result<QuiverPoint, QuiverError> {
    if l == 0 || z.len() != l {
        return Err(QuiverError::Dimension(format!("need l ≥ 1 and exactly l = {l} values of Z")));
    }
    if z.iter().any(Field::is_zero) || t.is_zero() {
        return Err(QuiverError::Inconsistent("Z_i and t must be nonzero".into()));
    }
    let mut rng = SeedStream::new(seed).rng();
    for _ in 0..MAX_ATTEMPTS {
        let x: Vec<Mat> = (0..l).map(|_| random_invertible(&mut rng, n, 3)).collect();
        let mut d = vec![random_matrix(&mut rng, n, n, 3)];
        for i in 1..l {
            let ratio = z[i - 1].div(&z[i]).expect("nonzero");
            let rhs = minus_scalar(&one_plus(&(&d[i - 1] * &x[i - 1])).scale(&ratio), &Rational::one());
            let xinv = x[i].inverse().expect("sampled invertible");
            d.push(&xinv * &rhs);
        }
        let Ok(tmat) = QuiverPoint::derive_t(l, z, &x, &d) else { continue };
        if tmat.det().is_zero() {
            continue;
        }
        let p = QuiverPoint { l, n, z: z.to_vec(), t: t.clone(), x, d, tmat };
        if !check_point(&p)?.certified() {
            return Err(QuiverError::Inconsistent("chain construction failed to certify".into()));
        }
        return Ok(p);
    }
    Err(QuiverError::SamplingExhausted(MAX_ATTEMPTS))
}
