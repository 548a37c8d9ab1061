//! Operator equality by exhaustive evaluation on a monomial box or on
//! random monomials with freshly sampled parameters.

use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use cyclodaha_core::laurent::box_monomials;
use cyclodaha_core::{Field, LaurentPoly, Monomial, SeedStream};

use crate::action::apply_expr;
use crate::error::OpsError;
use crate::expr::OperatorExpr;
use crate::rep::Rep;

/// How an equality was tested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    Box { radius: i32 },
    Random { trials: usize, seed: u64, window: i32 },
}

/// A monomial on which the two sides differ.
#[derive(Clone, Debug)]
pub struct Witness<F: Field> {
    pub monomial: Monomial,
    pub lhs: LaurentPoly<F>,
    pub rhs: LaurentPoly<F>,
    /// Parameter values in force for this evaluation.
    pub params: Value,
}

#[derive(Clone, Debug)]
pub struct EqualityReport<F: Field> {
    pub lhs: String,
    pub rhs: String,
    pub mode: Mode,
    pub result: bool,
    pub checked: usize,
    pub witness: Option<Witness<F>>,
}

impl<F: Field> EqualityReport<F> {
    pub fn to_json(&self) -> Value {
        let mut v = json!({ "lhs": self.lhs, "rhs": self.rhs, "result": self.result });
        match &self.mode {
            Mode::Box { radius } => {
                v["mode"] = json!("box");
                v["B"] = json!(radius);
            }
            Mode::Random { trials, seed, window } => {
                v["mode"] = json!("random");
                v["trials"] = json!(trials);
                v["seed"] = json!(seed);
                v["window"] = json!(window);
            }
        }
        if let Some(w) = &self.witness {
            v["witness"] = json!({
                "monomial": w.monomial.0,
                "lhs_image": w.lhs.to_json(),
                "rhs_image": w.rhs.to_json(),
                "params": w.params,
            });
        }
        v
    }
}

/// The default box radius `2·(longest word) + 2`.
pub fn default_radius(a: &OperatorExpr, b: &OperatorExpr) -> i32 {
    2 * a.max_word_len().max(b.max_word_len()) as i32 + 2
}

fn compare<F: Field>(
    rep: &Rep<F>,
    a: &OperatorExpr,
    b: &OperatorExpr,
    e: &Monomial,
) -> Result<Option<Witness<F>>, OpsError> {
    let p = LaurentPoly::monomial(e.clone());
    let la = apply_expr(rep, a, &p)?;
    let lb = apply_expr(rep, b, &p)?;
    Ok(if la == lb {
        None
    } else {
        Some(Witness { monomial: e.clone(), lhs: la, rhs: lb, params: rep.params_json() })
    })
}

fn sweep<F: Field>(
    rep: &Rep<F>,
    a: &OperatorExpr,
    b: &OperatorExpr,
    mons: &[Monomial],
) -> Result<Option<Witness<F>>, OpsError> {
    let found: Vec<Result<Option<Witness<F>>, OpsError>> =
        mons.par_iter().map(|e| compare(rep, a, b, e)).collect();
    for r in found {
        if let Some(w) = r? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn report<F: Field>(
    a: &OperatorExpr,
    b: &OperatorExpr,
    mode: Mode,
    checked: usize,
    witness: Option<Witness<F>>,
) -> EqualityReport<F> {
    EqualityReport { lhs: a.to_string(), rhs: b.to_string(), mode, result: witness.is_none(), checked, witness }
}

/// `a·X^e = b·X^e` for every exponent vector in `[−B, B]^N`. The witness is
/// the first failing monomial in graded-lex order.
pub fn op_equal_on_box<F: Field>(
    rep: &Rep<F>,
    a: &OperatorExpr,
    b: &OperatorExpr,
    radius: i32,
) -> Result<EqualityReport<F>, OpsError> {
    assert!(radius >= 1, "box radius must be at least 1");
    let mut mons = box_monomials(rep.n(), radius);
    mons.sort();
    let w = sweep(rep, a, b, &mons)?;
    Ok(report(a, b, Mode::Box { radius }, mons.len(), w))
}

/// Check `a = b` on polynomial inputs only: all monomials with exponents in `[0, B]`.
pub fn op_equal_on_polynomials<F: Field>(
    rep: &Rep<F>,
    a: &OperatorExpr,
    b: &OperatorExpr,
    radius: i32,
) -> Result<EqualityReport<F>, OpsError> {
    let mut mons: Vec<Monomial> =
        box_monomials(rep.n(), radius).into_iter().filter(|m| m.is_polynomial()).collect();
    mons.sort();
    let w = sweep(rep, a, b, &mons)?;
    Ok(report(a, b, Mode::Box { radius }, mons.len(), w))
}

/// Randomized check: each trial resamples the unpinned parameters and draws
/// one monomial with exponents in `[−window, window]`.
pub fn op_equal_randomized<F: Field>(
    rep: &Rep<F>,
    a: &OperatorExpr,
    b: &OperatorExpr,
    trials: usize,
    seed: u64,
    window: i32,
) -> Result<EqualityReport<F>, OpsError> {
    assert!(trials >= 1, "at least one trial");
    let root = SeedStream::new(seed);
    let found: Vec<Result<Option<Witness<F>>, OpsError>> = (0..trials)
        .into_par_iter()
        .map(|k| {
            let s = root.child(k as u64);
            let r = rep.resampled(s.child(0).seed())?;
            let mut rng = s.child(1).rng();
            let e = Monomial((0..rep.n()).map(|_| rng.gen_range(-window..=window)).collect());
            compare(&r, a, b, &e)
        })
        .collect();
    let mut witness = None;
    for r in found {
        if let Some(w) = r? {
            witness = Some(w);
            break;
        }
    }
    Ok(report(a, b, Mode::Random { trials, seed, window }, trials, witness))
}
