//! Involutive automorphisms and their verification at representation level.
//!
//! An image `φ(e)` substitutes every letter by its image word and applies the
//! parameter change to the coefficients of `e`; the image words themselves
//! carry coefficients in the target parameters. The relation `φ(lhs) = φ(rhs)`
//! is then evaluated in the original representation.

use std::fmt;

use cyclodaha_core::Field;
use cyclodaha_ops::expr::build::*;
use cyclodaha_ops::{Coef, Gen, OperatorExpr, Param, Rep};

use crate::catalog::{catalog, CatalogId, Relation};
use crate::error::AlgebraError;
use crate::verify::{check_pair, verify_relations, FamilyReport, RelationResult, VerifyMode};
use crate::words::{a_word, a_word_inv, b_word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Involution {
    /// `X_i ↔ D_i^{(l)}`, `T_i ↦ T_i⁻¹`, `(q, 𝐭) ↦ (q⁻¹, 𝐭⁻¹)` on the cyclotomic DAHA.
    CycDaha,
    /// `X_i ↔ D_i`, `s ↦ s`, `y_i ↦ y_i + ħ + kΣ_{j<i} s_{ij} − kΣ_{j>i} s_{ij}`, `(ħ, k) ↦ (−ħ, −k)`.
    DegCyc,
    /// The `l = 1` case of [`Involution::CycDaha`] on `T`, `X`, `D`.
    L1,
    /// `X_i ↦ Y_i⁻¹`, `Y_i ↦ X_i⁻¹`, `T_i ↦ T_i⁻¹`, `(q, 𝐭) ↦ (q⁻¹, 𝐭⁻¹)` on the full DAHA.
    Cherednik,
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Involution::CycDaha => "cyc-daha",
            Involution::DegCyc => "deg-cyc",
            Involution::L1 => "l1",
            Involution::Cherednik => "cherednik",
        })
    }
}

impl Involution {
    pub fn for_catalog(id: CatalogId) -> Option<Involution> {
        match id {
            CatalogId::CycDaha => Some(Involution::CycDaha),
            CatalogId::DegCyc => Some(Involution::DegCyc),
            CatalogId::L1 | CatalogId::Lastrel => Some(Involution::L1),
            CatalogId::Daha => Some(Involution::Cherednik),
            CatalogId::DegDaha => None,
        }
    }

    /// Parameter change applied to coefficients.
    pub fn coef_map(self, c: &Coef) -> Coef {
        let deg = self == Involution::DegCyc;
        c.subst(&|p| match p {
            Param::Q | Param::Tt if !deg => Coef::param_pow(p, -1),
            Param::Hbar | Param::K if deg => Coef::param(p).neg(),
            other => Coef::param(other),
        })
    }

    /// Image of a single letter for rank `n`.
    pub fn letter(self, gen: Gen, n: usize) -> Result<OperatorExpr, AlgebraError> {
        let bad = || Err(AlgebraError::NotInDomain { gen: gen.to_string(), involution: self.to_string() });
        let out = match (self, gen) {
            (Involution::DegCyc, Gen::S(_) | Gen::Sij(..)) => g(gen),
            (Involution::DegCyc, Gen::Ylow(i)) => {
                // +k s_ij for j < i, −k s_ij for j > i
                let mut e = g(gen).add(&p(Param::Hbar));
                for j in (1..=n).filter(|&j| j != i) {
                    let t = p(Param::K).compose(&g(Gen::Sij(i.min(j), i.max(j))));
                    e = if j < i { e.add(&t) } else { e.sub(&t) };
                }
                e
            }
            (Involution::DegCyc | Involution::CycDaha | Involution::L1, Gen::X(i)) => g(Gen::Dl(i)),
            (Involution::DegCyc | Involution::CycDaha | Involution::L1, Gen::Dl(i)) => g(Gen::X(i)),
            (Involution::CycDaha | Involution::L1 | Involution::Cherednik, Gen::T(i)) => g(Gen::Tinv(i)),
            (Involution::CycDaha | Involution::L1 | Involution::Cherednik, Gen::Tinv(i)) => g(Gen::T(i)),
            (Involution::CycDaha, Gen::Y(i)) => prod(&[p(Param::Q), b_word(i, n), g(gen), a_word(i)]),
            (Involution::CycDaha, Gen::Yinv(i)) => {
                let binv = b_word(i, n).map(&|x| g(x.inverse().expect("T letters invert")), &|c| c.clone());
                prod(&[c(Coef::param_pow(Param::Q, -1)), a_word_inv(i), g(gen), binv])
            }
            (Involution::Cherednik, Gen::X(i)) => g(Gen::Yinv(i)),
            (Involution::Cherednik, Gen::Xinv(i)) => g(Gen::Y(i)),
            (Involution::Cherednik, Gen::Y(i)) => g(Gen::Xinv(i)),
            (Involution::Cherednik, Gen::Yinv(i)) => g(Gen::X(i)),
            _ => return bad(),
        };
        Ok(out)
    }

    pub fn domain(self, n: usize) -> Vec<Gen> {
        let mut v = Vec::new();
        match self {
            Involution::DegCyc => {
                v.extend((1..n).map(Gen::S));
                for i in 1..=n {
                    v.extend([Gen::X(i), Gen::Dl(i), Gen::Ylow(i)]);
                }
            }
            Involution::CycDaha | Involution::L1 => {
                for i in 1..n {
                    v.extend([Gen::T(i), Gen::Tinv(i)]);
                }
                for i in 1..=n {
                    v.extend([Gen::X(i), Gen::Dl(i)]);
                    if self == Involution::CycDaha {
                        v.extend([Gen::Y(i), Gen::Yinv(i)]);
                    }
                }
            }
            Involution::Cherednik => {
                for i in 1..n {
                    v.extend([Gen::T(i), Gen::Tinv(i)]);
                }
                for i in 1..=n {
                    v.extend([Gen::X(i), Gen::Xinv(i), Gen::Y(i), Gen::Yinv(i)]);
                }
            }
        }
        v
    }
}

/// `φ(e)` for rank `n`; errors if a letter lies outside the domain.
pub fn involution_image(inv: Involution, e: &OperatorExpr, n: usize) -> Result<OperatorExpr, AlgebraError> {
    for gen in e.generators() {
        inv.letter(gen, n)?;
    }
    Ok(e.map(&|x| inv.letter(x, n).expect("domain checked"), &|c0| inv.coef_map(c0)))
}

#[derive(Clone, Debug)]
pub struct InvolutionReport {
    pub involution: Involution,
    pub relations: FamilyReport,
    /// `φ²(g) = g` per domain generator.
    pub square: Vec<RelationResult>,
}

impl InvolutionReport {
    pub fn all_pass(&self) -> bool {
        self.relations.all_pass() && self.square.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "involution": self.involution.to_string(),
            "relations": self.relations.to_json(),
            "square": self.square.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Check that the φ-image of every relation of `id` holds in `rep`, and that
/// `φ²` is the identity on each generator of the domain.
pub fn verify_involution<F: Field>(
    rep: &Rep<F>,
    id: CatalogId,
    mode: VerifyMode,
) -> Result<InvolutionReport, AlgebraError> {
    let inv = Involution::for_catalog(id).ok_or_else(|| AlgebraError::UnknownFamily(format!("{id} has no involution")))?;
    let n = rep.n();
    let cat = catalog(id, n, rep.l().max(1))?;
    let mut images = Vec::with_capacity(cat.relations.len());
    for r in &cat.relations {
        images.push(Relation {
            schema: r.schema.clone(),
            name: format!("phi({})", r.name),
            lhs: involution_image(inv, &r.lhs, n)?,
            rhs: involution_image(inv, &r.rhs, n)?,
        });
    }
    let relations = verify_relations(rep, id, &images, mode)?;
    let mut square = Vec::new();
    for gen in inv.domain(n) {
        let e = g(gen);
        let twice = involution_image(inv, &involution_image(inv, &e, n)?, n)?;
        let rep_ = check_pair(rep, &twice, &e, mode)?;
        let json = rep_.to_json();
        square.push(RelationResult {
            relation: format!("phi^2({gen})"),
            schema: "phi^2".into(),
            pass: rep_.result,
            checked: rep_.checked,
            witness: json.get("witness").cloned(),
            params: rep.params_json(),
        });
    }
    Ok(InvolutionReport { involution: inv, relations, square })
}
