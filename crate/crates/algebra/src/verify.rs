//! Batch verification of a relation catalog in a polynomial representation.

use rayon::prelude::*;
use serde_json::{json, Value};

use cyclodaha_core::{Field, Rational};
use cyclodaha_ops::{
    default_radius, op_equal_on_box, op_equal_randomized, EqualityReport, OperatorExpr, OpsError, Param, Rep,
};

use crate::catalog::{CatalogId, Relation, RelationCatalog};
use crate::error::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Box sweep; `None` uses the per-relation default radius.
    Box { radius: Option<i32> },
    Random { trials: usize, seed: u64, window: i32 },
}

#[derive(Clone, Debug)]
pub struct RelationResult {
    pub relation: String,
    pub schema: String,
    pub pass: bool,
    pub checked: usize,
    pub witness: Option<Value>,
    pub params: Value,
}

impl RelationResult {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "relation": self.relation,
            "schema": self.schema,
            "status": if self.pass { "pass" } else { "fail" },
            "checked": self.checked,
            "params": self.params,
        });
        if let Some(w) = &self.witness {
            v["witness"] = w.clone();
        }
        v
    }
}

#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub catalog: CatalogId,
    pub results: Vec<RelationResult>,
}

impl FamilyReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationResult> {
        self.results.iter().filter(|r| !r.pass)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.results.iter().map(RelationResult::to_json).collect())
    }
}

/// Check a single pair of expressions under `mode`.
pub fn check_pair<F: Field>(
    rep: &Rep<F>,
    lhs: &OperatorExpr,
    rhs: &OperatorExpr,
    mode: VerifyMode,
) -> Result<EqualityReport<F>, OpsError> {
    match mode {
        VerifyMode::Box { radius } => {
            let b = radius.unwrap_or_else(|| default_radius(lhs, rhs));
            op_equal_on_box(rep, lhs, rhs, b)
        }
        VerifyMode::Random { trials, seed, window } => op_equal_randomized(rep, lhs, rhs, trials, seed, window),
    }
}

fn check_relation<F: Field>(rep: &Rep<F>, r: &Relation, mode: VerifyMode) -> Result<RelationResult, OpsError> {
    let rep_ = check_pair(rep, &r.lhs, &r.rhs, mode)?;
    let json = rep_.to_json();
    Ok(RelationResult {
        relation: r.name.clone(),
        schema: r.schema.clone(),
        pass: rep_.result,
        checked: rep_.checked,
        witness: json.get("witness").cloned(),
        params: rep.params_json(),
    })
}

/// Verify every relation of `cat` in `rep`. Relations run in parallel;
/// results keep catalog order.
pub fn verify_family<F: Field>(
    rep: &Rep<F>,
    cat: &RelationCatalog,
    mode: VerifyMode,
) -> Result<FamilyReport, AlgebraError> {
    verify_relations(rep, cat.id, &cat.relations, mode)
}

pub fn verify_relations<F: Field>(
    rep: &Rep<F>,
    id: CatalogId,
    rels: &[Relation],
    mode: VerifyMode,
) -> Result<FamilyReport, AlgebraError> {
    if rep.family() != id.family() {
        return Err(AlgebraError::WrongFamily {
            catalog: id.to_string(),
            expected: id.family().to_string(),
            got: rep.family().to_string(),
        });
    }
    let results: Result<Vec<_>, OpsError> = rels.par_iter().map(|r| check_relation(rep, r, mode)).collect();
    Ok(FamilyReport { catalog: id, results: results? })
}

/// A generic rational representation suited to `id`, drawn from `seed`.
///
/// Degenerate catalogs pin `ħ = 1`; `l1` and `lastrel` pin `l = 1`, `Z_1 = 1`.
pub fn generic_rep(id: CatalogId, n: usize, l: usize, seed: u64) -> Result<Rep<Rational>, AlgebraError> {
    let one = Rational::from_i64(1);
    let placeholder = |k: usize| (0..k).map(|i| Rational::new(2 * i as i64 + 3, 7)).collect::<Vec<_>>();
    let rep = match id.family() {
        cyclodaha_ops::Family::DegDaha => {
            Rep::deg(n, one.clone(), Rational::new(2, 7), placeholder(l)).pin(Param::Hbar, one)
        }
        _ => {
            let l = if id.needs_unit_z1() { 1 } else { l };
            let r = Rep::daha(n, Rational::new(7, 5), Rational::new(3, 2), placeholder(l));
            if id.needs_unit_z1() {
                r.pin(Param::Z(1), one)
            } else {
                r
            }
        }
    };
    Ok(rep.resampled(seed)?)
}
