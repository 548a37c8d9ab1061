//! Local bow data around one circle and one adjacent cross.
//!
//! Two layouts occur. With the circle on the left (`V_1 ⇄ V_2 → V_3`):
//! `C: V_1 → V_2`, `D: V_2 → V_1`, `A: V_2 → V_3`, `a: ℂ → V_3`, `b: V_2 → ℂ`,
//! subject to `B_1 = tZ(1+DC)⁻¹`, `B_2 = Z'(1+CD)⁻¹`, `B_3A − AB_2 + ab = 0`.
//! With the cross on the left (`V_1 → V_2 ⇄ V_3`):
//! `A: V_1 → V_2`, `a: ℂ → V_2`, `b: V_1 → ℂ`, `C: V_2 → V_3`, `D: V_3 → V_2`,
//! subject to `B_2 = tZ(1+DC)⁻¹`, `B_3 = Z'(1+CD)⁻¹`, `B_2A − AB_1 + ab = 0`.

use rand::Rng;
use serde_json::{json, Value};

use cyclodaha_core::{Field, Rational, SeedStream};

use crate::error::QuiverError;
use crate::mat::{self, closure, col_basis, largest_stable, null_space, one_plus, q, random_invertible, random_matrix, Mat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layout {
    CircleCross,
    CrossCircle,
}

impl Layout {
    pub fn name(self) -> &'static str {
        match self {
            Layout::CircleCross => "circle-cross",
            Layout::CrossCircle => "cross-circle",
        }
    }

    pub fn parse(s: &str) -> Result<Layout, QuiverError> {
        match s {
            "circle-cross" => Ok(Layout::CircleCross),
            "cross-circle" => Ok(Layout::CrossCircle),
            other => Err(QuiverError::Parse(format!("unknown layout {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BowData {
    pub layout: Layout,
    pub dims: [usize; 3],
    pub t: Rational,
    pub z: Rational,
    pub zp: Rational,
    pub c: Mat,
    pub d: Mat,
    /// The map `A` at the cross.
    pub am: Mat,
    /// The framing vector `a: ℂ → V`.
    pub a: Mat,
    /// The framing covector `b: V → ℂ`.
    pub b: Mat,
    pub b1: Mat,
    pub b2: Mat,
    pub b3: Mat,
}

/// Exact residuals and stability witnesses.
#[derive(Clone, Debug)]
pub struct BowReport {
    /// Named residuals written without inverses, e.g. `B_1(1+DC) − tZ`.
    pub residuals: Vec<(&'static str, Mat)>,
    pub b_invertible: bool,
    /// A nonzero `B`-stable subspace of `ker A ∩ ker b`, if any.
    pub s1_witness: Option<Mat>,
    /// A proper `B`-stable subspace containing `Im A + Im a`, if any.
    pub s2_witness: Option<Mat>,
    /// Whether `A` is invertible, reported when the cross has equal
    /// dimensions on both sides.
    pub a_invertible: Option<bool>,
}

impl BowReport {
    pub fn equations_hold(&self) -> bool {
        self.b_invertible && self.residuals.iter().all(|(_, m)| m.is_zero())
    }

    pub fn stable(&self) -> bool {
        self.s1_witness.is_none() && self.s2_witness.is_none()
    }

    pub fn certified(&self) -> bool {
        self.equations_hold() && self.stable()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "certified": self.certified(),
            "equations": self.equations_hold(),
            "b_invertible": self.b_invertible,
            "residuals": self.residuals.iter().map(|(k, m)| json!({"name": k, "zero": m.is_zero(), "value": m.to_json()})).collect::<Vec<_>>(),
            "s1": match &self.s1_witness { None => json!("ok"), Some(w) => json!({"witness": w.to_json()}) },
            "s2": match &self.s2_witness { None => json!("ok"), Some(w) => json!({"witness": w.to_json()}) },
            "a_invertible": self.a_invertible,
        })
    }
}

impl BowData {
    fn shape_of(&self) -> [(&'static str, &Mat, usize, usize); 8] {
        let [v1, v2, v3] = self.dims;
        match self.layout {
            Layout::CircleCross => [
                ("C", &self.c, v2, v1),
                ("D", &self.d, v1, v2),
                ("A", &self.am, v3, v2),
                ("a", &self.a, v3, 1),
                ("b", &self.b, 1, v2),
                ("B1", &self.b1, v1, v1),
                ("B2", &self.b2, v2, v2),
                ("B3", &self.b3, v3, v3),
            ],
            Layout::CrossCircle => [
                ("C", &self.c, v3, v2),
                ("D", &self.d, v2, v3),
                ("A", &self.am, v2, v1),
                ("a", &self.a, v2, 1),
                ("b", &self.b, 1, v1),
                ("B1", &self.b1, v1, v1),
                ("B2", &self.b2, v2, v2),
                ("B3", &self.b3, v3, v3),
            ],
        }
    }

    pub fn validate_shape(&self) -> Result<(), QuiverError> {
        for (name, m, r, c) in self.shape_of() {
            if m.rows() != r || m.cols() != c {
                return Err(QuiverError::Dimension(format!("{name}: expected {r}x{c}, got {}x{}", m.rows(), m.cols())));
            }
        }
        if self.t.is_zero() || self.z.is_zero() || self.zp.is_zero() {
            return Err(QuiverError::Inconsistent("t, Z, Z' must be nonzero".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "layout": self.layout.name(),
            "dims": self.dims,
            "t": self.t.to_json(),
            "Z": self.z.to_json(),
            "Zp": self.zp.to_json(),
            "C": self.c.to_json(),
            "D": self.d.to_json(),
            "A": self.am.to_json(),
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "B1": self.b1.to_json(),
            "B2": self.b2.to_json(),
            "B3": self.b3.to_json(),
        })
    }

    pub fn from_json(v: &Value) -> Result<BowData, QuiverError> {
        let layout = Layout::parse(mat::field(v, "layout")?.as_str().unwrap_or_default())?;
        let dims_v = mat::field(v, "dims")?
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| QuiverError::Parse("\"dims\" must be three nonnegative integers".into()))?;
        let mut dims = [0usize; 3];
        for (k, x) in dims_v.iter().enumerate() {
            dims[k] = x.as_u64().ok_or_else(|| QuiverError::Parse("\"dims\" entries must be integers".into()))? as usize;
        }
        let [v1, v2, v3] = dims;
        let (cs, ds, asz, smalla, smallb) = match layout {
            Layout::CircleCross => ((v2, v1), (v1, v2), (v3, v2), v3, v2),
            Layout::CrossCircle => ((v3, v2), (v2, v3), (v2, v1), v2, v1),
        };
        let m = |k: &str, (r, c): (usize, usize)| mat::matrix_value(mat::field(v, k)?, r, c, k);
        let bow = BowData {
            layout,
            dims,
            t: mat::scalar_field(v, "t")?,
            z: mat::scalar_field(v, "Z")?,
            zp: mat::scalar_field(v, "Zp")?,
            c: m("C", cs)?,
            d: m("D", ds)?,
            am: m("A", asz)?,
            a: m("a", (smalla, 1))?,
            b: m("b", (1, smallb))?,
            b1: m("B1", (v1, v1))?,
            b2: m("B2", (v2, v2))?,
            b3: m("B3", (v3, v3))?,
        };
        bow.validate_shape()?;
        Ok(bow)
    }
}

/// `(S1)`: the largest subspace of `ker A ∩ ker b` stable under `B`.
pub fn s1_subspace(am: &Mat, b: &Mat, bm: &Mat) -> Mat {
    let k = null_space(&am.vstack(b));
    largest_stable(&k, bm)
}

/// `(S2)`: the smallest `B`-stable subspace containing `Im A + Im a`.
pub fn s2_subspace(am: &Mat, a: &Mat, bm: &Mat) -> Mat {
    closure(&am.hstack(a), &[bm])
}

pub fn check_bow(bow: &BowData) -> Result<BowReport, QuiverError> {
    bow.validate_shape()?;
    let tz = bow.t.clone() * &bow.z;
    let id = |n: usize, c: &Rational| Mat::scalar(n, c.clone());
    let [v1, v2, v3] = bow.dims;
    let ab = &bow.a * &bow.b;
    let (residuals, b_inv, s1, s2, cross_dims);
    match bow.layout {
        Layout::CircleCross => {
            residuals = vec![
                ("B1(1+DC) - tZ", &(&bow.b1 * &one_plus(&(&bow.d * &bow.c))) - &id(v1, &tz)),
                ("B2(1+CD) - Z'", &(&bow.b2 * &one_plus(&(&bow.c * &bow.d))) - &id(v2, &bow.zp)),
                ("B3 A - A B2 + a b", &(&(&bow.b3 * &bow.am) - &(&bow.am * &bow.b2)) + &ab),
            ];
            b_inv = [&bow.b1, &bow.b2, &bow.b3].iter().all(|m| !m.det().is_zero());
            s1 = s1_subspace(&bow.am, &bow.b, &bow.b2);
            s2 = s2_subspace(&bow.am, &bow.a, &bow.b3);
            cross_dims = (v2, v3);
        }
        Layout::CrossCircle => {
            residuals = vec![
                ("B2(1+DC) - tZ", &(&bow.b2 * &one_plus(&(&bow.d * &bow.c))) - &id(v2, &tz)),
                ("B3(1+CD) - Z'", &(&bow.b3 * &one_plus(&(&bow.c * &bow.d))) - &id(v3, &bow.zp)),
                ("B2 A - A B1 + a b", &(&(&bow.b2 * &bow.am) - &(&bow.am * &bow.b1)) + &ab),
            ];
            b_inv = [&bow.b1, &bow.b2, &bow.b3].iter().all(|m| !m.det().is_zero());
            s1 = s1_subspace(&bow.am, &bow.b, &bow.b1);
            s2 = s2_subspace(&bow.am, &bow.a, &bow.b2);
            cross_dims = (v1, v2);
        }
    }
    let target = s2.rows();
    Ok(BowReport {
        residuals,
        b_invertible: b_inv,
        s1_witness: (s1.cols() > 0).then_some(s1),
        s2_witness: (s2.cols() < target).then_some(col_basis(&s2)),
        a_invertible: (cross_dims.0 == cross_dims.1).then(|| !bow.am.det().is_zero()),
    })
}

const MAX_ATTEMPTS: usize = 1000;

/// A random certified bow in the circle-cross layout. Supported shapes are
/// `dim V_3 = dim V_2` (with `A` invertible and `B_3` solved from the cross
/// relation) and `dim V_3 = 1` (with `b` solved from it).
pub fn sample_bow(dims: [usize; 3], t: &Rational, z: &Rational, zp: &Rational, seed: u64) -> Result<BowData, QuiverError> {
    let [v1, v2, v3] = dims;
    if v3 != v2 && v3 != 1 {
        return Err(QuiverError::Dimension("sample_bow needs dim V3 = dim V2 or dim V3 = 1".into()));
    }
    let mut rng = SeedStream::new(seed).rng();
    let tz = t.clone() * z;
    for _ in 0..MAX_ATTEMPTS {
        let c = random_matrix(&mut rng, v2, v1, 2);
        let d = random_matrix(&mut rng, v1, v2, 2);
        let (Some(dc), Some(cd)) = (one_plus(&(&d * &c)).inverse(), one_plus(&(&c * &d)).inverse()) else { continue };
        let b1 = dc.scale(&tz);
        let b2 = cd.scale(zp);
        let (am, a, b, b3);
        if v3 == v2 {
            am = random_invertible(&mut rng, v2, 2);
            a = random_matrix(&mut rng, v3, 1, 2);
            b = random_matrix(&mut rng, 1, v2, 2);
            let ainv = am.inverse().expect("sampled invertible");
            b3 = &(&(&am * &b2) - &(&a * &b)) * &ainv;
        } else {
            am = random_matrix(&mut rng, 1, v2, 2);
            let lam = q(rng.gen_range(1..=4));
            a = Mat::scalar(1, q(rng.gen_range(1..=3)));
            let ainv = a.get(0, 0).inv().expect("nonzero");
            b = (&(&am * &b2) - &am.scale(&lam)).scale(&ainv);
            b3 = Mat::scalar(1, lam);
        }
        let bow = BowData { layout: Layout::CircleCross, dims, t: t.clone(), z: z.clone(), zp: zp.clone(), c, d, am, a, b, b1, b2, b3 };
        if check_bow(&bow)?.certified() {
            return Ok(bow);
        }
    }
    Err(QuiverError::SamplingExhausted(MAX_ATTEMPTS))
}

impl BowData {
    /// The local picture closed off by a cross with a zero-dimensional
    /// outer segment on each side, so that linkage invariants are defined.
    pub fn flanked_diagram(&self) -> crate::diagram::Diagram {
        use crate::diagram::{Diagram, Elem};
        let [v1, v2, v3] = self.dims.map(|x| x as i64);
        let inner = match self.layout {
            Layout::CircleCross => [Elem::Circle, Elem::Cross],
            Layout::CrossCircle => [Elem::Cross, Elem::Circle],
        };
        Diagram::linear(vec![Elem::Cross, inner[0], inner[1], Elem::Cross], vec![0, v1, v2, v3, 0]).expect("shape")
    }
}
