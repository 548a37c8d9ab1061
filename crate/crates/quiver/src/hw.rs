//! The Hanany-Witten transition exchanging a circle and the cross to its
//! right, built from the complex
//! `V_2 --α--> V_1 ⊕ V_3 ⊕ ℂ --β--> V_3` with `α = [D; A; b]`,
//! `β = [AB_2C, B_3 − Z', a]`, and its inverse built from the kernel of
//! `βⁿ = [Aⁿ, Dⁿ, aⁿ]`.

use serde_json::{json, Value};

use cyclodaha_core::Field;

use crate::bow::{check_bow, BowData, Layout};
use crate::error::QuiverError;
use crate::mat::{inverse, minus_scalar, null_space, one_plus, Mat};

/// The three coordinate embeddings of `V_1 ⊕ V_3 ⊕ ℂ`, as column blocks of
/// the identity.
fn embeddings(v1: usize, v3: usize) -> (Mat, Mat, Mat) {
    let id = Mat::identity(v1 + v3 + 1);
    (id.block(0, v1 + v3 + 1, 0, v1), id.block(0, v1 + v3 + 1, v1, v1 + v3), id.block(0, v1 + v3 + 1, v1 + v3, v1 + v3 + 1))
}

fn require_equations(bow: &BowData, layout: Layout) -> Result<bool, QuiverError> {
    if bow.layout != layout {
        return Err(QuiverError::Inconsistent(format!("expected the {} layout", layout.name())));
    }
    let r = check_bow(bow)?;
    if !r.equations_hold() {
        return Err(QuiverError::Uncertified("bow equations have nonzero residuals".into()));
    }
    Ok(r.stable())
}

fn require_stable(stable: bool) -> Result<(), QuiverError> {
    if stable {
        Ok(())
    } else {
        Err(QuiverError::Uncertified("stability (S1)/(S2) fails".into()))
    }
}

/// `α = [D; A; b]` and `β = [AB_2C, B_3 − Z', a]` for circle-cross data.
pub fn complex(bow: &BowData) -> (Mat, Mat) {
    let alpha = bow.d.vstack(&bow.am).vstack(&bow.b);
    let beta = (&(&bow.am * &bow.b2) * &bow.c).hstack(&minus_scalar(&bow.b3, &bow.zp)).hstack(&bow.a);
    (alpha, beta)
}

/// Circle-cross data to cross-circle data on `V_2ⁿ = Coker α`.
pub fn hw_transition(bow: &BowData) -> Result<BowData, QuiverError> {
    let stable = require_equations(bow, Layout::CircleCross)?;
    let [v1, v2, v3] = bow.dims;
    let (alpha, beta) = complex(bow);
    if !(&beta * &alpha).is_zero() {
        return Err(QuiverError::Inconsistent("beta alpha is not zero".into()));
    }
    if v2 > 0 && alpha.rank() < v2 {
        return Err(QuiverError::AlphaNotInjective);
    }
    require_stable(stable)?;
    // The projection onto the cokernel and a section of it.
    let proj = alpha.cokernel();
    let vn = proj.rows();
    let section = proj.solve(&Mat::identity(vn)).ok_or_else(|| QuiverError::Inconsistent("cokernel projection is not surjective".into()))?;
    let (e1, e3, ec) = embeddings(v1, v3);
    let an = &proj * &e1;
    let dn = &proj * &e3;
    let small_an = &proj * &ec;
    let bn = &(&bow.b * &bow.c) * &bow.b1;
    let b3inv = inverse(&bow.b3, "B3")?;
    let minus_b3inv_beta = -&(&b3inv * &beta);
    let cn = &minus_b3inv_beta * &section;
    if &cn * &proj != minus_b3inv_beta {
        return Err(QuiverError::Inconsistent("-B3⁻¹β does not descend to the cokernel".into()));
    }
    let tz = bow.t.clone() * &bow.z;
    let b2n = inverse(&one_plus(&(&dn * &cn)), "1 + DⁿCⁿ")?.scale(&tz);
    let out = BowData {
        layout: Layout::CrossCircle,
        dims: [v1, vn, v3],
        t: bow.t.clone(),
        z: bow.z.clone(),
        zp: bow.zp.clone(),
        c: cn,
        d: dn,
        am: an,
        a: small_an,
        b: bn,
        b1: bow.b1.clone(),
        b2: b2n,
        b3: bow.b3.clone(),
    };
    // αⁿ = [tZ − B_1; −CⁿB_2ⁿAⁿ; bⁿ] must equal αCB_1 entrywise.
    let alpha_n = alpha_new(&out);
    let expected = &(&alpha * &bow.c) * &bow.b1;
    if alpha_n != expected {
        return Err(QuiverError::Inconsistent("alphaⁿ differs from alpha C B1".into()));
    }
    Ok(out)
}

/// `αⁿ = [tZ − B_1; −CⁿB_2ⁿAⁿ; bⁿ]` for cross-circle data.
pub fn alpha_new(bow: &BowData) -> Mat {
    let tz = bow.t.clone() * &bow.z;
    let top = &Mat::scalar(bow.dims[0], tz) - &bow.b1;
    let mid = -&(&(&bow.c * &bow.b2) * &bow.am);
    top.vstack(&mid).vstack(&bow.b)
}

/// `βⁿ = [Aⁿ, Dⁿ, aⁿ]` for cross-circle data.
pub fn beta_new(bow: &BowData) -> Mat {
    bow.am.hstack(&bow.d).hstack(&bow.a)
}

/// Cross-circle data back to circle-cross data on `V_2 = Ker βⁿ`.
pub fn hw_inverse(bow: &BowData) -> Result<BowData, QuiverError> {
    let stable = require_equations(bow, Layout::CrossCircle)?;
    let [v1, v2n, v3] = bow.dims;
    let beta_n = beta_new(bow);
    if v2n > 0 && beta_n.rank() < v2n {
        return Err(QuiverError::BetaNotSurjective);
    }
    require_stable(stable)?;
    let alpha_n = alpha_new(bow);
    if !(&beta_n * &alpha_n).is_zero() {
        return Err(QuiverError::Inconsistent("betaⁿ alphaⁿ is not zero".into()));
    }
    let k = null_space(&beta_n);
    let v2 = k.cols();
    let total = v1 + v3 + 1;
    let d = k.block(0, v1, 0, v2);
    let am = k.block(v1, v1 + v3, 0, v2);
    let b = k.block(v1 + v3, total, 0, v2);
    let a = -&(&(&bow.b3 * &bow.c) * &bow.a);
    let b1inv = inverse(&bow.b1, "B1")?;
    let c = k
        .solve(&(&alpha_n * &b1inv))
        .ok_or_else(|| QuiverError::Inconsistent("alphaⁿ B1⁻¹ does not land in Ker betaⁿ".into()))?;
    let b2 = inverse(&one_plus(&(&c * &d)), "1 + CD")?.scale(&bow.zp);
    Ok(BowData {
        layout: Layout::CircleCross,
        dims: [v1, v2, v3],
        t: bow.t.clone(),
        z: bow.z.clone(),
        zp: bow.zp.clone(),
        c,
        d,
        am,
        a,
        b,
        b1: bow.b1.clone(),
        b2,
        b3: bow.b3.clone(),
    })
}

/// An explicit isomorphism between two bows of the same layout which agree
/// on `V_1`, `V_3`: a matrix `φ` on the middle space with `φ` invertible and
/// all maps intertwined.
#[derive(Clone, Debug)]
pub struct Intertwiner {
    pub phi: Mat,
}

impl Intertwiner {
    pub fn to_json(&self) -> Value {
        json!({"phi": self.phi.to_json()})
    }
}

/// Check that `φ: V_2 → V_2'` intertwines `x` and `y`.
pub fn verify_intertwiner(x: &BowData, y: &BowData, phi: &Mat) -> bool {
    if x.layout != y.layout || x.dims != y.dims || phi.det().is_zero() {
        return false;
    }
    let same_outer = x.b1 == y.b1 && x.b3 == y.b3 && x.t == y.t && x.z == y.z && x.zp == y.zp;
    let b2 = &(phi * &x.b2) == &(&y.b2 * phi);
    let maps = match x.layout {
        // C: V1 → V2, D: V2 → V1, A: V2 → V3, b: V2 → ℂ, a: ℂ → V3.
        Layout::CircleCross => {
            &(phi * &x.c) == &y.c && &(&y.d * phi) == &x.d && &(&y.am * phi) == &x.am && &(&y.b * phi) == &x.b && x.a == y.a
        }
        // A: V1 → V2, a: ℂ → V2, b: V1 → ℂ, C: V2 → V3, D: V3 → V2.
        Layout::CrossCircle => {
            &(phi * &x.am) == &y.am && &(phi * &x.a) == &y.a && x.b == y.b && &(&y.c * phi) == &x.c && &(phi * &x.d) == &y.d
        }
    };
    same_outer && b2 && maps
}

/// After `hw_inverse(hw_transition(bow))`, the original `V_2` maps onto the
/// recovered one by `α` expressed in the recovered kernel basis.
pub fn round_trip(bow: &BowData) -> Result<(BowData, BowData, Intertwiner), QuiverError> {
    let there = hw_transition(bow)?;
    let back = hw_inverse(&there)?;
    if back.dims != bow.dims {
        return Err(QuiverError::Inconsistent(format!("round trip changed dims {:?} to {:?}", bow.dims, back.dims)));
    }
    let (alpha, _) = complex(bow);
    let (alpha_back, _) = complex(&back);
    let phi = alpha_back
        .solve(&alpha)
        .ok_or_else(|| QuiverError::Inconsistent("Im alpha differs from Ker betaⁿ".into()))?;
    if !verify_intertwiner(bow, &back, &phi) {
        return Err(QuiverError::Inconsistent("the round trip is not intertwined by alpha".into()));
    }
    Ok((there, back, Intertwiner { phi }))
}

/// The opposite round trip `hw_transition(hw_inverse(bow))` on cross-circle
/// data, intertwined by the map induced on cokernels.
pub fn round_trip_inverse(bow: &BowData) -> Result<(BowData, BowData, Intertwiner), QuiverError> {
    let there = hw_inverse(bow)?;
    let back = hw_transition(&there)?;
    if back.dims != bow.dims {
        return Err(QuiverError::Inconsistent(format!("round trip changed dims {:?} to {:?}", bow.dims, back.dims)));
    }
    // Both βⁿ are surjections from V_1 ⊕ V_3 ⊕ ℂ with the same kernel.
    let phi = beta_new(bow)
        .transpose()
        .solve(&beta_new(&back).transpose())
        .ok_or_else(|| QuiverError::Inconsistent("the two projections have different kernels".into()))?
        .transpose();
    if !verify_intertwiner(bow, &back, &phi) {
        return Err(QuiverError::Inconsistent("the round trip is not intertwined".into()));
    }
    Ok((there, back, Intertwiner { phi }))
}
