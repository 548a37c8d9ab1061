//! Execution of each command. A handler returns the result payload and
//! whether every check in it passed.

use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use cyclodaha_algebra::{catalog, generic_rep, verify_family, CatalogId, VerifyMode};
use cyclodaha_core::{Cyclo, LaurentPoly, Rational};
use cyclodaha_macdonald::{cyclotomic_hamiltonian, m1_l1_at, macdonald_m1_at, symmetric_basis, MacError, PolyParam};
use cyclodaha_ops::{apply_expr, Rep};
use cyclodaha_quasiinv::{
    flatness_cyclotomic, flatness_plain, flatness_twisted_q, graded_basis, hilbert, series_json, QuasiError, QuasiSpec,
    Variant,
};
use cyclodaha_quiver::{
    check_bow, check_point, hw_inverse, hw_transition, irreducibility_check, linkage_invariants, product_formula_residuals,
    psi, sample_chain, BowData, Layout, QuiverError, QuiverPoint,
};

use crate::acceptance;
use crate::args::*;

/// Why a command could not produce a verdict.
#[derive(Debug)]
pub enum Failure {
    /// Malformed flags or input files (exit 2).
    Usage(String),
    /// The engine itself failed (exit 3).
    Internal(String),
}

/// A finished command: its payload, whether every check passed, and an
/// optional artifact to write to `--out`.
pub struct Outcome {
    pub results: Value,
    pub pass: bool,
    pub artifact: Option<Value>,
}

impl Outcome {
    fn new(results: Value, pass: bool) -> Self {
        Outcome { results, pass, artifact: None }
    }

    fn with_artifact(mut self, a: Value) -> Self {
        self.artifact = Some(a);
        self
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn internal(e: impl std::fmt::Display) -> Failure {
    Failure::Internal(e.to_string())
}

fn rational(s: &str, what: &str) -> Result<Rational, Failure> {
    s.trim().parse::<Rational>().map_err(|e| Failure::Usage(format!("--{what}: {e}")))
}

fn rationals(v: &[String], what: &str) -> Result<Vec<Rational>, Failure> {
    v.iter().map(|s| rational(s, what)).collect()
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

pub fn execute(cmd: &Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Relations(RelationsCmd::Verify(a)) => relations_verify(a),
        Command::Quasi(QuasiCmd::Series(a)) => quasi_series(a),
        Command::Quasi(QuasiCmd::Flatness(a)) => quasi_flatness(a),
        Command::Quiver(QuiverCmd::Check(a)) => quiver_check(a),
        Command::Quiver(QuiverCmd::Sample(a)) => quiver_sample(a),
        Command::Bow(BowCmd::Check(a)) => bow_check(a),
        Command::Bow(BowCmd::Hw(a)) => bow_hw(a),
        Command::Macdonald(MacdonaldCmd::Apply(a)) => macdonald_apply(a),
        Command::Macdonald(MacdonaldCmd::Commute(a)) => macdonald_commute(a),
        Command::Suite(a) => suite(a),
    }
}

fn relations_verify(a: &VerifyArgs) -> Result<Outcome, Failure> {
    let id: CatalogId = a.family.parse().map_err(usage)?;
    if a.n == 0 {
        return Err(usage("--N must be positive"));
    }
    let mode = match a.mode {
        CheckMode::Box => VerifyMode::Box { radius: a.b },
        CheckMode::Random => VerifyMode::Random { trials: a.trials, seed: a.seed, window: a.window },
    };
    let rep = generic_rep(id, a.n, a.l, a.seed).map_err(internal)?;
    let cat = catalog(id, a.n, a.l).map_err(usage)?;
    let report = verify_family(&rep, &cat, mode).map_err(internal)?;
    let results = report.to_json();
    Ok(Outcome::new(results.clone(), report.all_pass()).with_artifact(results))
}

fn quasi_spec(variant: &str, n: Option<usize>, m: u32, a: &[String], mr: &[u32], q: &str) -> Result<QuasiSpec, Failure> {
    let variant: Variant = variant.parse().map_err(usage)?;
    let q = rational(q, "q")?;
    let twists = rationals(a, "a")?;
    let spec = match variant {
        Variant::PlainQ | Variant::Cyc => {
            let n = n.ok_or_else(|| usage(format!("--N is required for the {variant} variant")))?;
            if !twists.is_empty() {
                return Err(usage(format!("the {variant} variant takes no --a")));
            }
            if variant == Variant::PlainQ {
                QuasiSpec::plain_q(n, m, q)
            } else {
                QuasiSpec::cyclotomic(n, m, mr.to_vec(), q)
            }
        }
        Variant::Twisted | Variant::TwistedQ => {
            let n = n.unwrap_or(twists.len());
            if twists.len() != n {
                return Err(usage(format!("--a lists {} twists but --N is {n}", twists.len())));
            }
            if variant == Variant::Twisted {
                QuasiSpec::twisted(m, twists)
            } else {
                QuasiSpec::twisted_q(m, twists, q)
            }
        }
    };
    spec.validate().map_err(usage)?;
    Ok(spec)
}

fn quasi_error(e: QuasiError) -> Failure {
    match e {
        QuasiError::BadSpec(_) | QuasiError::ParameterDegenerate(_) => usage(e),
        other => internal(other),
    }
}

fn quasi_series(a: &SeriesArgs) -> Result<Outcome, Failure> {
    let spec = quasi_spec(&a.variant, a.n, a.m, &a.a, &a.mr, &a.q)?;
    let series = if spec.variant == Variant::Cyc && spec.l > 2 {
        hilbert(&graded_basis::<Cyclo>(&spec, a.maxdeg).map_err(quasi_error)?)
    } else {
        hilbert(&graded_basis::<Rational>(&spec, a.maxdeg).map_err(quasi_error)?)
    };
    let s = series_json(&series, spec.n);
    Ok(Outcome::new(json!({"spec": spec.to_json(), "series": s.clone()}), true).with_artifact(s))
}

fn quasi_flatness(a: &FlatnessArgs) -> Result<Outcome, Failure> {
    let spec = quasi_spec(&a.variant, a.n, a.m, &a.a, &a.mr, "1")?;
    let seeds: Vec<u64> = (a.seed..a.seed + a.seeds).collect();
    let report = match spec.variant {
        Variant::PlainQ => flatness_plain(spec.n, spec.m, a.maxdeg, &seeds),
        Variant::Cyc => flatness_cyclotomic(spec.n, spec.m, spec.mr.clone(), a.maxdeg, &seeds),
        Variant::TwistedQ => flatness_twisted_q(spec.m, spec.a.clone(), a.maxdeg, &seeds),
        Variant::Twisted => return Err(usage("flatness compares a deformation; use --variant twisted-q")),
    }
    .map_err(quasi_error)?;
    let j = report.to_json();
    Ok(Outcome::new(j.clone(), report.pass()).with_artifact(j))
}

/// Rejections of the input on mathematical grounds are verdicts, not errors.
fn quiver_verdict(e: QuiverError) -> Result<Outcome, Failure> {
    match e {
        QuiverError::Uncertified(_)
        | QuiverError::AlphaNotInjective
        | QuiverError::BetaNotSurjective
        | QuiverError::XNotInvertible
        | QuiverError::SingularFactor(_) => Ok(Outcome::new(json!({"error": e.to_string()}), false)),
        QuiverError::Parse(_) | QuiverError::Dimension(_) => Err(usage(e)),
        other => Err(internal(other)),
    }
}

fn point_results(p: &QuiverPoint) -> Result<Outcome, Failure> {
    let rep = match check_point(p) {
        Ok(r) => r,
        Err(e) => return quiver_verdict(e),
    };
    let mut out = json!({"point": rep.to_json()});
    if rep.certified() {
        match psi(p) {
            Ok(q) => {
                let (plus, minus) = product_formula_residuals(&q);
                out["quadruple"] = q.to_json();
                out["product_formulas"] = json!({"L_plus": plus.is_zero(), "L_minus": minus.is_zero()});
                out["irreducibility"] = irreducibility_check(&q).to_json();
                let pass = plus.is_zero() && minus.is_zero();
                return Ok(Outcome::new(out, pass));
            }
            Err(e) => return quiver_verdict(e),
        }
    }
    Ok(Outcome::new(out, false))
}

fn quiver_check(a: &FileArgs) -> Result<Outcome, Failure> {
    let p = QuiverPoint::from_json(&read_json(&a.file)?).map_err(usage)?;
    point_results(&p)
}

fn default_z(l: usize) -> Vec<Rational> {
    let base = [Rational::new(2, 1), Rational::new(3, 5), Rational::new(7, 2), Rational::new(5, 11)];
    (0..l).map(|i| base.get(i).cloned().unwrap_or_else(|| Rational::new(2 * i as i64 + 3, 13))).collect()
}

fn quiver_sample(a: &SampleArgs) -> Result<Outcome, Failure> {
    if a.l == 0 || a.n == 0 {
        return Err(usage("--l and --N must be positive"));
    }
    let z = if a.z.is_empty() { default_z(a.l) } else { rationals(&a.z, "Z")? };
    if z.len() != a.l {
        return Err(usage(format!("--Z lists {} values but --l is {}", z.len(), a.l)));
    }
    let t = rational(&a.t, "t")?;
    let p = match sample_chain(a.l, a.n, &z, &t, a.seed) {
        Ok(p) => p,
        Err(e) => return quiver_verdict(e),
    };
    let mut out = point_results(&p)?;
    out.results["sample"] = p.to_json();
    Ok(out.with_artifact(p.to_json()))
}

fn bow_check(a: &FileArgs) -> Result<Outcome, Failure> {
    let bow = BowData::from_json(&read_json(&a.file)?).map_err(usage)?;
    match check_bow(&bow) {
        Ok(r) => {
            let d = bow.flanked_diagram();
            let out = json!({"bow": r.to_json(), "diagram": d.to_json()});
            Ok(Outcome::new(out, r.certified()))
        }
        Err(e) => quiver_verdict(e),
    }
}

fn bow_hw(a: &HwArgs) -> Result<Outcome, Failure> {
    let bow = BowData::from_json(&read_json(&a.file)?).map_err(usage)?;
    let moved = match bow.layout {
        Layout::CircleCross => hw_transition(&bow),
        Layout::CrossCircle => hw_inverse(&bow),
    };
    let moved = match moved {
        Ok(m) => m,
        Err(e) => return quiver_verdict(e),
    };
    let rep = check_bow(&moved).map_err(internal)?;
    let before = linkage_invariants(&bow.flanked_diagram());
    let after = linkage_invariants(&moved.flanked_diagram());
    let out = json!({
        "from": bow.layout.name(),
        "to": moved.layout.name(),
        "dims": moved.dims,
        "output_report": rep.to_json(),
        "invariants": {"before": before, "after": after, "preserved": before == after},
    });
    let pass = rep.certified() && before == after;
    Ok(Outcome::new(out, pass).with_artifact(moved.to_json()))
}

fn mac_verdict(e: MacError) -> Result<Outcome, Failure> {
    match e {
        MacError::InputNotSymmetric | MacError::NotCommuting { .. } => Ok(Outcome::new(json!({"error": e.to_string()}), false)),
        MacError::BadParameter(_) | MacError::IndexOutOfRange { .. } => Err(usage(e)),
        other => Err(internal(other)),
    }
}

fn macdonald_apply(a: &ApplyArgs) -> Result<Outcome, Failure> {
    let q = rational(&a.q, "q")?;
    let t = rational(&a.t, "t")?;
    let p = LaurentPoly::<Rational>::from_json(&read_json(&a.poly)?).map_err(usage)?;
    if p.nvars() != a.n {
        return Err(usage(format!("the polynomial has {} variables but --N is {}", p.nvars(), a.n)));
    }
    let out = match a.op {
        MacOp::M1 => macdonald_m1_at(&q, &t, &p),
        MacOp::M1L1 => m1_l1_at(&q, &t, &p),
    };
    match out {
        Ok(v) => Ok(Outcome::new(json!({"input": p.to_json(), "output": v.to_json()}), true)),
        Err(e) => mac_verdict(e),
    }
}

fn macdonald_commute(a: &CommuteArgs) -> Result<Outcome, Failure> {
    let q = rational(&a.q, "q")?;
    let tt = rational(&a.tt, "tt")?;
    let z = if a.z.is_empty() { (0..a.l).map(|i| Rational::new(5 + 2 * i as i64, 3)).collect() } else { rationals(&a.z, "Z")? };
    if z.len() != a.l {
        return Err(usage(format!("--Z lists {} values but --l is {}", z.len(), a.l)));
    }
    let rep = Rep::daha(a.n, q, tt, z);
    let f = PolyParam::cyclotomic(a.l);
    let build = |r| cyclotomic_hamiltonian(&rep, r, &f, a.maxdeg);
    let (m1, m2) = match (build(a.r1), build(a.r2)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => return mac_verdict(e),
    };
    let mut checked = 0;
    let mut witness = None;
    for s in symmetric_basis::<Rational>(a.n, a.maxdeg) {
        let ap = |e, p: &LaurentPoly<Rational>| apply_expr(&rep, e, p).map_err(internal);
        let ab = ap(&m1.expr, &ap(&m2.expr, &s)?)?;
        let ba = ap(&m2.expr, &ap(&m1.expr, &s)?)?;
        checked += 1;
        if ab != ba {
            witness = Some(s.to_json());
            break;
        }
    }
    let out = json!({"checked": checked, "params": rep.params_json(), "witness": witness});
    Ok(Outcome::new(out, witness.is_none()))
}

fn suite(a: &SuiteArgs) -> Result<Outcome, Failure> {
    let items: Vec<(Value, bool)> = match a.name {
        SuiteName::Smoke => acceptance::smoke().into_iter().map(|c| (c.json(), c.pass)).collect(),
        SuiteName::PaperAcceptance => acceptance::criterion_ids()
            .filter_map(acceptance::run_criterion)
            .map(|r| (r.to_json(), r.pass()))
            .collect(),
    };
    let pass = items.iter().all(|(_, p)| *p);
    let results = Value::Array(items.into_iter().map(|(v, _)| v).collect());
    Ok(Outcome::new(results.clone(), pass).with_artifact(results))
}
