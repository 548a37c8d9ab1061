//! The acceptance battery: twelve criteria, each a list of exact sub-checks
//! with pinned parameters and a runtime budget.

use std::time::{Duration, Instant};

use serde_json::{json, Value};

use cyclodaha_algebra::{catalog, generic_rep, schema_labels, verify_family, CatalogId, VerifyMode};
use cyclodaha_core::ratfunc::Var;
use cyclodaha_core::{ratfunc_simplify, Cyclo, Field, LaurentPoly, RatFunc, Rational, UPoly};
use cyclodaha_macdonald::{
    cyclotomic_hamiltonian, hecke_symmetrizer, m1_l1, macdonald_m1, macdonald_m1_at, symmetric_basis, y_f, PolyParam,
};
use cyclodaha_ops::expr::build::{g, sum};
use cyclodaha_ops::{apply_expr, op_equal_on_box, Gen, OperatorExpr, Param, Rep};
use cyclodaha_quasiinv::kostka::partitions_of;
use cyclodaha_quasiinv::{
    degree_basis, expected_total_series, expected_twisted_series, flatness_cyclotomic, flatness_plain, flatness_twisted_q,
    freeness_numerator, graded_basis, hilbert, kostka, molien_kostka, proportional, series_json, HilbertSeries, QuasiSpec,
};
use cyclodaha_quiver::{
    cell_telescoping, check_bow, check_point, check_quadruple, complex, lift_open_locus, linkage_invariants,
    product_formula_residuals, psi, round_trip, round_trip_inverse, sample_bow, sample_chain, vdb_equivariant, vdb_moment, Mat,
    VdBPair,
};

type P = LaurentPoly<Rational>;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// One named sub-check of a criterion.
#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    pub note: Option<String>,
}

impl Check {
    pub fn json(&self) -> Value {
        json!({"label": self.label, "status": if self.pass { "pass" } else { "fail" }, "note": self.note})
    }
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: usize,
    pub title: &'static str,
    pub thresholds: &'static str,
    pub budget: Duration,
    pub elapsed: Duration,
    pub checks: Vec<Check>,
}

impl CriterionResult {
    pub fn within_budget(&self) -> bool {
        self.elapsed <= self.budget
    }

    pub fn pass(&self) -> bool {
        self.within_budget() && !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// The one-line summary printed by the acceptance runner.
    pub fn line(&self) -> String {
        let ok = self.checks.iter().filter(|c| c.pass).count();
        let mut s = format!(
            "criterion {:>2} {}: {} ({}/{} checks, {:.1}s of {}s) [{}]",
            self.id,
            self.title,
            if self.pass() { "PASS" } else { "FAIL" },
            ok,
            self.checks.len(),
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            self.thresholds,
        );
        let failed: Vec<String> = self
            .failed()
            .map(|c| match &c.note {
                Some(n) => format!("{} ({n})", c.label),
                None => c.label.clone(),
            })
            .collect();
        if !failed.is_empty() {
            s.push_str(&format!(" failed: {}", failed.join("; ")));
        }
        if !self.within_budget() {
            s.push_str(" over the runtime budget");
        }
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "criterion": self.id,
            "title": self.title,
            "thresholds": self.thresholds,
            "status": if self.pass() { "pass" } else { "fail" },
            "budget_s": self.budget.as_secs(),
            "checks": self.checks.iter().map(Check::json).collect::<Vec<_>>(),
        })
    }
}

/// Collects sub-checks; an `Err` from the engine counts as a failed check.
#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, label: impl Into<String>, pass: bool) {
        self.0.push(Check { label: label.into(), pass, note: None });
    }

    fn push_note(&mut self, label: impl Into<String>, pass: bool, note: impl Into<String>) {
        self.0.push(Check { label: label.into(), pass, note: Some(note.into()) });
    }

    fn result<E: std::fmt::Display>(&mut self, label: impl Into<String>, r: Result<bool, E>) {
        match r {
            Ok(b) => self.push(label, b),
            Err(e) => self.push_note(label, false, format!("error: {e}")),
        }
    }
}

struct Spec {
    id: usize,
    title: &'static str,
    thresholds: &'static str,
    budget_s: u64,
    run: fn(&mut Checks),
}

const CRITERIA: [Spec; 12] = [
    Spec { id: 1, title: "DAHA relations", thresholds: "12 schemas, box B=3, N in {2,3}, seeds 1..3", budget_s: 120, run: c1 },
    Spec {
        id: 2,
        title: "degenerate relations and Dunkl commutativity",
        thresholds: "deg-daha and deg-cyc (l<=2) box B=2, hbar=1, N in {2,3}, seeds 1..3; Dunkl/trig-Dunkl N<=4",
        budget_s: 120,
        run: c2,
    },
    Spec {
        id: 3,
        title: "cyclotomic DAHA presentation",
        thresholds: "R1-R7,R11,R12,cd1-cd10,lastrel randomized 30 trials, N in {2,3}, l in {1,2}",
        budget_s: 300,
        run: c3,
    },
    Spec { id: 4, title: "Dunkl-Opdam commutativity", thresholds: "box B=2 over Q(zeta_l), N in {2,3}, l in {2,3}", budget_s: 120, run: c4 },
    Spec {
        id: 5,
        title: "Macdonald identity",
        thresholds: "symmetric degree<=5, N<=3; M.1 symbolic in t, N<=4",
        budget_s: 120,
        run: c5,
    },
    Spec {
        id: 6,
        title: "commuting families",
        thresholds: "Y_i(f), D_i^(l) box B=1, N<=3, l<=2; [M1,M2] symmetric degree<=3; M1(X-1) formula degree<=4",
        budget_s: 300,
        run: c6,
    },
    Spec {
        id: 7,
        title: "quasiinvariant series",
        thresholds: "exact dims degree<=10 (<=12 for Q_2(1,0,0)); P_(a,1) stated form at a in {1/3,5/2,-2/7}",
        budget_s: 300,
        run: c7,
    },
    Spec {
        id: 8,
        title: "flatness protocols",
        thresholds: "plain N in {2,3}, m in {1,2}, degree<=10; cyc N=2 l=2 degree<=8; twisted-q N=2 degree<=8; seeds 1..3",
        budget_s: 600,
        run: c8,
    },
    Spec {
        id: 9,
        title: "expected twisted series and Kostka",
        thresholds: "(N,l) in {(2,2),(3,3),(3,2)}, m in {1,2}, degree<=10, h+/h- split; Kostka vs Molien |pi|<=4",
        budget_s: 300,
        run: c9,
    },
    Spec {
        id: 10,
        title: "quiver identities",
        thresholds: "10 chain points per (l,N), l<=4, N<=3; psi/lift round trip; bumped entry caught",
        budget_s: 120,
        run: c10,
    },
    Spec {
        id: 11,
        title: "Hanany-Witten transition",
        thresholds: "dims (1,1,1), (2,2,2) x 5 seeds; equations, stability, invariants, alpha^n = alpha C B1",
        budget_s: 120,
        run: c11,
    },
    Spec {
        id: 12,
        title: "Van den Bergh and fusion",
        thresholds: "moment equivariance and cell telescoping, l<=4, 5 seeds",
        budget_s: 60,
        run: c12,
    },
];

/// Run criterion `id` (1-based).
pub fn run_criterion(id: usize) -> Option<CriterionResult> {
    let spec = CRITERIA.iter().find(|s| s.id == id)?;
    let start = Instant::now();
    let mut checks = Checks::default();
    (spec.run)(&mut checks);
    Some(CriterionResult {
        id: spec.id,
        title: spec.title,
        thresholds: spec.thresholds,
        budget: Duration::from_secs(spec.budget_s),
        elapsed: start.elapsed(),
        checks: checks.0,
    })
}

pub fn criterion_ids() -> impl Iterator<Item = usize> {
    CRITERIA.iter().map(|s| s.id)
}

/// A quick cross-section of every module, meant to finish in seconds.
pub fn smoke() -> Vec<Check> {
    let mut c = Checks::default();
    family(&mut c, CatalogId::Daha, 2, 0, 1, VerifyMode::Box { radius: Some(2) });
    family(&mut c, CatalogId::DegDaha, 2, 1, 1, VerifyMode::Box { radius: Some(2) });
    family(&mut c, CatalogId::CycDaha, 2, 2, 1, VerifyMode::Random { trials: 5, seed: 1, window: 2 });
    let d = dims(&QuasiSpec::twisted(2, vec![r(1, 1), r(0, 1), r(0, 1)]), 8);
    c.result("Q_2(1,0,0) through degree 8", d.map(|d| d[2..] == [1, 1, 2, 3, 5, 7, 10]));
    c.result("plain flatness N=2 m=1 degree<=6", flatness_plain(2, 1, 6, &[1]).map(|r| r.pass()));
    let t = r(3, 2);
    for seed in 0..3 {
        let out = sample_chain(2, 2, &zs(2), &t, seed).and_then(|p| {
            let (plus, minus) = product_formula_residuals(&psi(&p)?);
            Ok(plus.is_zero() && minus.is_zero())
        });
        c.result(format!("chain point l=2 N=2 seed {seed}"), out);
    }
    let out = sample_bow([1, 1, 1], &t, &r(5, 7), &r(2, 3), 11).and_then(|b| Ok(check_bow(&round_trip(&b)?.0)?.certified()));
    c.result("Hanany-Witten (1,1,1) seed 11", out);
    c12(&mut c);
    c.0
}

fn family(c: &mut Checks, id: CatalogId, n: usize, l: usize, seed: u64, mode: VerifyMode) {
    let label = format!("{id} N={n} l={l} seed={seed}");
    let outcome = generic_rep(id, n, l, seed).and_then(|rep| {
        let cat = catalog(id, n, l)?;
        verify_family(&rep, &cat, mode)
    });
    match outcome {
        Ok(rep) => {
            let bad: Vec<String> = rep.failures().map(|f| f.relation.clone()).collect();
            if bad.is_empty() {
                c.push(label, true);
            } else {
                c.push_note(label, false, bad.join(", "));
            }
        }
        Err(e) => c.push_note(label, false, format!("error: {e}")),
    }
}

fn vanishes(rep: &Rep<Rational>, e: &OperatorExpr, radius: i32) -> Result<bool, cyclodaha_ops::OpsError> {
    Ok(op_equal_on_box(rep, e, &OperatorExpr::zero(), radius)?.result)
}

fn vanishes_cyclo(rep: &Rep<Cyclo>, e: &OperatorExpr, radius: i32) -> Result<bool, cyclodaha_ops::OpsError> {
    Ok(op_equal_on_box(rep, e, &OperatorExpr::zero(), radius)?.result)
}

fn c1(c: &mut Checks) {
    c.push("12 schemas", schema_labels(CatalogId::Daha).len() == 12);
    for n in 2..=3 {
        for seed in 1..=3 {
            family(c, CatalogId::Daha, n, 0, seed, VerifyMode::Box { radius: Some(3) });
        }
    }
}

fn deg_rep(n: usize) -> Rep<Rational> {
    Rep::deg(n, r(1, 1), r(2, 7), vec![]).pin(Param::Hbar, r(1, 1))
}

fn c2(c: &mut Checks) {
    for n in 2..=3 {
        for seed in 1..=3 {
            family(c, CatalogId::DegDaha, n, 1, seed, VerifyMode::Box { radius: Some(2) });
            for l in 1..=2 {
                family(c, CatalogId::DegCyc, n, l, seed, VerifyMode::Box { radius: Some(2) });
            }
        }
    }
    for n in 2..=4 {
        let rep = deg_rep(n);
        let radius = if n == 4 { 1 } else { 2 };
        for i in 1..=n {
            for j in i + 1..=n {
                let d = g(Gen::Dunkl(i)).commutator(&g(Gen::Dunkl(j)));
                c.result(format!("[Dunkl{i},Dunkl{j}] N={n}"), vanishes(&rep, &d, radius));
                let t = g(Gen::Dtrig(i)).commutator(&g(Gen::Dtrig(j)));
                c.result(format!("[Dtrig{i},Dtrig{j}] N={n}"), vanishes(&rep, &t, radius));
            }
        }
    }
}

fn c3(c: &mut Checks) {
    let mode = VerifyMode::Random { trials: 30, seed: 17, window: 3 };
    for n in 2..=3 {
        for l in 1..=2 {
            family(c, CatalogId::CycDaha, n, l, 4, mode);
        }
        family(c, CatalogId::Lastrel, n, 1, 4, mode);
    }
}

fn c4(c: &mut Checks) {
    for l in 2..=3usize {
        for n in 2..=3 {
            let cs = (0..l).map(|j| Cyclo::rational(r(2 * j as i64 + 3, 5))).collect();
            let rep = Rep::cyc_rat(n, l, Cyclo::rational(r(1, 1)), Cyclo::rational(r(3, 11)), cs);
            for i in 1..=n {
                for j in i + 1..=n {
                    let e = g(Gen::DO(i)).commutator(&g(Gen::DO(j)));
                    c.result(format!("[DO{i},DO{j}] N={n} l={l}"), vanishes_cyclo(&rep, &e, 2));
                }
            }
        }
    }
}

fn daha(n: usize, z: Vec<Rational>) -> Rep<Rational> {
    Rep::daha(n, r(7, 5), r(3, 2), z)
}

fn c5(c: &mut Checks) {
    for n in 1..=3 {
        let rep = daha(n, vec![]);
        let op = sum(&(1..=n).map(|i| g(Gen::Y(i))).collect::<Vec<_>>()).compose(&hecke_symmetrizer(n));
        let all = symmetric_basis::<Rational>(n, 5).iter().try_fold(true, |acc, s| {
            let lhs = apply_expr(&rep, &op, s).map_err(|e| e.to_string())?;
            let rhs = macdonald_m1(&rep, s).map_err(|e| e.to_string())?;
            Ok::<bool, String>(acc && lhs == rhs)
        });
        c.result(format!("(Y1+..+YN)e = M on Sym<=5, N={n}"), all);
    }
    let t = RatFunc::var(Var::T);
    let q = RatFunc::constant(r(7, 5));
    for n in 1..=4 {
        let one = LaurentPoly::<RatFunc>::one(n);
        let out = macdonald_m1_at(&q, &t, &one).map_err(|e| e.to_string()).and_then(|out| {
            let mut num = vec![Rational::one()];
            num.extend(std::iter::repeat(Rational::zero()).take(n - 1));
            num.push(-Rational::one());
            let expect =
                ratfunc_simplify(Var::T, &UPoly::new(num), &UPoly::from_i64s(&[1, -1])).map_err(|e| e.to_string())?;
            Ok(out == LaurentPoly::constant(n, expect))
        });
        c.result(format!("M.1 = (1-t^N)/(1-t), N={n}"), out);
    }
}

fn c6(c: &mut Checks) {
    let fs = [
        PolyParam::one(),
        PolyParam::from_rationals(&[r(-1, 1), r(1, 1)]),
        PolyParam::from_rationals(&[r(3, 7), r(-2, 1), r(1, 1)]),
    ];
    for n in 2..=3 {
        let rep = daha(n, vec![]);
        for (k, f) in fs.iter().enumerate() {
            for i in 1..=n {
                for j in i + 1..=n {
                    let e = y_f(&rep, i, f)
                        .and_then(|a| Ok(a.commutator(&y_f(&rep, j, f)?)))
                        .map_err(|e| e.to_string())
                        .and_then(|e| vanishes(&rep, &e, 1).map_err(|e| e.to_string()));
                    c.result(format!("[Y{i}(f{k}),Y{j}(f{k})] N={n}"), e);
                }
            }
        }
        for l in 1..=2 {
            let rep = daha(n, (0..l).map(|k| r(5 + 2 * k as i64, 3)).collect());
            for i in 1..=n {
                for j in i + 1..=n {
                    let e = g(Gen::Dl(i)).commutator(&g(Gen::Dl(j)));
                    c.result(format!("[D{i}^(l),D{j}^(l)] N={n} l={l}"), vanishes(&rep, &e, 1));
                }
            }
        }
    }
    for n in 2..=3 {
        let rep = daha(n, vec![r(1, 1)]).pin(Param::Z(1), r(1, 1));
        let f = PolyParam::cyclotomic(1);
        let out = (|| -> Result<bool, String> {
            let m1 = cyclotomic_hamiltonian(&rep, 1, &f, 3).map_err(|e| e.to_string())?;
            let m2 = cyclotomic_hamiltonian(&rep, 2, &f, 3).map_err(|e| e.to_string())?;
            let ap = |e: &OperatorExpr, p: &P| apply_expr(&rep, e, p).map_err(|e| e.to_string());
            for s in symmetric_basis::<Rational>(n, 3) {
                if ap(&m1.expr, &ap(&m2.expr, &s)?)? != ap(&m2.expr, &ap(&m1.expr, &s)?)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })();
        c.result(format!("[M1,M2] on Sym<=3, N={n}"), out);
    }
    for n in 1..=3 {
        let rep = daha(n, vec![r(1, 1)]).pin(Param::Z(1), r(1, 1));
        let f = PolyParam::from_rationals(&[r(-1, 1), r(1, 1)]);
        let out = (|| -> Result<bool, String> {
            let m = cyclotomic_hamiltonian(&rep, 1, &f, 2).map_err(|e| e.to_string())?;
            for s in symmetric_basis::<Rational>(n, 4) {
                let a = apply_expr(&rep, &m.expr, &s).map_err(|e| e.to_string())?;
                if a != m1_l1(&rep, &s).map_err(|e| e.to_string())? {
                    return Ok(false);
                }
            }
            Ok(true)
        })();
        c.result(format!("explicit formula = M1(X-1) on Sym<=4, N={n}"), out);
    }
}

fn dims(spec: &QuasiSpec, maxdeg: usize) -> Result<Vec<i64>, String> {
    Ok(hilbert(&graded_basis::<Rational>(spec, maxdeg).map_err(|e| e.to_string())?).coeffs)
}

fn closed(num: &[i64], den: &[usize], len: usize) -> Vec<i64> {
    HilbertSeries::rational(num, den, len).coeffs
}

fn c7(c: &mut Checks) {
    // (t + t^4)/((1−t)(1−t²)) for a = 1, m = 2
    let got = dims(&QuasiSpec::twisted(2, vec![r(1, 1), r(0, 1)]), 10);
    c.result("Q_2(1,0) = (t^a + t^(2m+1-a))/((1-t)(1-t^2))", got.map(|d| d == closed(&[0, 1, 0, 0, 1], &[1, 2], 11)));
    for m in 1..=2u32 {
        let mut num = vec![0; m as usize + 1];
        num[m as usize] = 1;
        let got = dims(&QuasiSpec::twisted(m, vec![r(1, 2), r(0, 1)]), 10);
        c.result(format!("Q_{m}(1/2,0) = t^m/(1-t)^2"), got.map(|d| d == closed(&num, &[1, 1], 11)));
    }
    let s = QuasiSpec::twisted(2, vec![r(1, 1), r(0, 1), r(0, 1)]);
    match dims(&s, 12) {
        Ok(d) => {
            c.push("Q_2(1,0,0) dims 1,1,2,3,5,7,10,15,20,26,33 from degree 2", d[..2] == [0, 0] && d[2..] == [1, 1, 2, 3, 5, 7, 10, 15, 20, 26, 33]);
            let f = freeness_numerator(&HilbertSeries::new(d.clone()), 3, 12);
            c.push_note("freeness numerator has -1 at t^12", f.numerator.get(12) == Some(&-1), format!("{:?}", f.numerator));
            let j = series_json(&HilbertSeries::new(d), 3);
            c.push("negativity flag set (free_flag false)", f.negative && j["free_flag"] == false);
        }
        Err(e) => c.push_note("Q_2(1,0,0)", false, e),
    }
    // The degree-1 null space of Q_1(a,0) against the stated generator.
    let one = Rational::one();
    for a in [r(1, 3), r(5, 2), r(-2, 7)] {
        let s = QuasiSpec::twisted(1, vec![a.clone(), r(0, 1)]);
        match degree_basis::<Rational>(&s, 1) {
            Ok(b) if b.len() == 1 => {
                let stated = &P::var(2, 0).scale(&(&a - &one)) + &P::var(2, 1).scale(&(&a + &one));
                let computed = &P::var(2, 0).scale(&(&one - &a)) + &P::var(2, 1).scale(&(&one + &a));
                let note = format!("null space spanned by {}", b[0]);
                let label = format!("P_(a,1) proportional to (a-1)X1+(a+1)X2 at a={a}");
                if proportional(&b[0], &stated) {
                    c.push(label, true);
                } else {
                    let hint = if proportional(&b[0], &computed) { "; equals (1-a)X1+(1+a)X2" } else { "" };
                    c.push_note(label, false, format!("{note}{hint}"));
                }
            }
            Ok(b) => c.push_note(format!("P_(a,1) at a={a}"), false, format!("degree-1 dimension {}", b.len())),
            Err(e) => c.push_note(format!("P_(a,1) at a={a}"), false, e.to_string()),
        }
    }
}

fn c8(c: &mut Checks) {
    let seeds = [1, 2, 3];
    for n in 2..=3 {
        for m in 1..=2 {
            c.result(format!("plain N={n} m={m}"), flatness_plain(n, m, 10, &seeds).map(|r| r.pass()));
        }
    }
    for m in 0..=1 {
        for m1 in 0..=1 {
            c.result(format!("cyclotomic N=2 l=2 m={m} m1={m1}"), flatness_cyclotomic(2, m, vec![m1], 8, &seeds).map(|r| r.pass()));
        }
    }
    for (m, a) in [(1, r(1, 3)), (2, r(1, 2)), (1, r(2, 5))] {
        c.result(format!("twisted-q N=2 m={m} a={a}"), flatness_twisted_q(m, vec![a, r(0, 1)], 8, &seeds).map(|r| r.pass()));
    }
}

fn c9(c: &mut Checks) {
    let len = 11;
    let cases: Vec<(&str, Vec<usize>, Vec<Rational>)> = vec![
        ("(2,2)", vec![1, 1], vec![r(1, 3), r(0, 1)]),
        ("(3,3)", vec![1, 1, 1], vec![r(1, 3), r(3, 4), r(0, 1)]),
        ("(3,2)", vec![1, 2], vec![r(2, 5), r(0, 1), r(0, 1)]),
    ];
    for m in 1..=2u32 {
        for (name, parts, a) in &cases {
            let s = QuasiSpec::twisted(m, a.clone());
            let out = dims(&s, len - 1).and_then(|got| {
                let want = expected_total_series(parts, m, len).map_err(|e| e.to_string())?.coeffs;
                Ok(got == want)
            });
            c.result(format!("(N,l)={name} m={m}"), out);
        }
        let a = vec![r(2, 5), r(0, 1), r(0, 1)];
        for (sign, shape, label) in [(1i8, vec![2usize], "h+"), (-1, vec![1, 1], "h-")] {
            let out = dims(&QuasiSpec::twisted(m, a.clone()).with_parity(1, 2, sign), len - 1).and_then(|got| {
                let want = expected_twisted_series(&[1, 2], m, &[vec![1], shape.clone()], len).map_err(|e| e.to_string())?;
                Ok(got == want.coeffs)
            });
            c.result(format!("{label} split (3,2) m={m}"), out);
        }
        // h₊ numerator t^{2m}, h₋ numerator t^{4m+1} over (1−t)²(1−t²)
        let mu = m as usize;
        let mut plus = vec![0; 2 * mu + 1];
        plus[2 * mu] = 1;
        let mut minus = vec![0; 4 * mu + 2];
        minus[4 * mu + 1] = 1;
        let hp = expected_twisted_series(&[1, 2], m, &[vec![1], vec![2]], len).map(|h| h.coeffs == closed(&plus, &[1, 1, 2], len));
        c.result(format!("h+ numerator t^{} m={m}", 2 * mu), hp);
        let hm = expected_twisted_series(&[1, 2], m, &[vec![1], vec![1, 1]], len).map(|h| h.coeffs == closed(&minus, &[1, 1, 2], len));
        c.result(format!("h- numerator t^{} m={m}", 4 * mu + 1), hm);
    }
    for n in 1..=4 {
        for p in partitions_of(n) {
            c.result(format!("Kostka {p:?} vs Molien"), molien_kostka(&p, 30).map(|k| k == kostka(&p)).ok_or("non-integer Molien coefficient"));
        }
    }
}

fn zs(l: usize) -> Vec<Rational> {
    [r(2, 1), r(3, 5), r(7, 2), r(5, 11)][..l].to_vec()
}

fn c10(c: &mut Checks) {
    let t = r(3, 2);
    for l in 1..=4 {
        for n in 1..=3 {
            let mut prod = true;
            let mut trip = true;
            let mut err = None;
            for seed in 0..10 {
                let out = (|| -> Result<(bool, bool), cyclodaha_quiver::QuiverError> {
                    let p = sample_chain(l, n, &zs(l), &t, seed)?;
                    let q = psi(&p)?;
                    let (plus, minus) = product_formula_residuals(&q);
                    let lifted = lift_open_locus(&q)?;
                    Ok((plus.is_zero() && minus.is_zero() && check_quadruple(&q).certified(), psi(&lifted)? == q))
                })();
                match out {
                    Ok((a, b)) => {
                        prod &= a;
                        trip &= b;
                    }
                    Err(e) => {
                        err = Some(e.to_string());
                        prod = false;
                    }
                }
            }
            match err {
                Some(e) => c.push_note(format!("l={l} N={n}"), false, e),
                None => {
                    c.push(format!("L+/L- product formulas l={l} N={n}"), prod);
                    c.push(format!("psi/lift round trip l={l} N={n}"), trip);
                }
            }
        }
    }
    for (l, n, seed) in [(1, 2, 0), (2, 1, 1), (3, 2, 2), (4, 3, 3)] {
        let out = sample_chain(l, n, &zs(l), &t, seed).and_then(|p| {
            let bumped = p.bumped(0, 0, 0);
            Ok(check_point(&p)?.certified() && !check_point(&bumped)?.certified())
        });
        c.result(format!("bumped entry caught l={l} N={n}"), out);
    }
}

fn c11(c: &mut Checks) {
    let (t, z, zp) = (r(3, 2), r(5, 7), r(2, 3));
    for (dims, seeds) in [([1, 1, 1], 11..16u64), ([2, 2, 2], 13..18)] {
        for seed in seeds {
            let out = (|| -> Result<Vec<(&'static str, bool)>, cyclodaha_quiver::QuiverError> {
                let bow = sample_bow(dims, &t, &z, &zp, seed)?;
                let (there, back, _) = round_trip(&bow)?;
                let (alpha, _) = complex(&bow);
                let rep_there = check_bow(&there)?;
                let (_, again, _) = round_trip_inverse(&there)?;
                Ok(vec![
                    ("input certified", check_bow(&bow)?.certified()),
                    ("transition equations", rep_there.equations_hold()),
                    ("transition stability", rep_there.stable()),
                    ("round trip certified", check_bow(&back)?.certified()),
                    ("alpha^n = alpha C B1", cyclodaha_quiver::alpha_new(&there) == &(&alpha * &bow.c) * &bow.b1),
                    ("invariants preserved", linkage_invariants(&bow.flanked_diagram()) == linkage_invariants(&there.flanked_diagram())),
                    ("inverse round trip", check_bow(&again)?.certified()),
                ])
            })();
            let label = format!("dims {dims:?} seed {seed}");
            match out {
                Ok(items) => {
                    let bad: Vec<&str> = items.iter().filter(|(_, b)| !b).map(|(l, _)| *l).collect();
                    if bad.is_empty() {
                        c.push(label, true);
                    } else {
                        c.push_note(label, false, bad.join(", "));
                    }
                }
                Err(e) => c.push_note(label, false, e.to_string()),
            }
        }
    }
}

fn c12(c: &mut Checks) {
    use cyclodaha_core::SeedStream;
    use cyclodaha_quiver::mat::{random_invertible, random_matrix};
    for seed in 0..5u64 {
        let mut rng = SeedStream::new(seed).rng();
        for (v, w) in [(1, 1), (2, 3), (3, 2), (4, 4)] {
            let pair = (0..100).find_map(|_| VdBPair::new(random_matrix(&mut rng, w, v, 3), random_matrix(&mut rng, v, w, 3)).ok());
            let out = match pair {
                Some(pair) => {
                    let g = random_invertible(&mut rng, v, 3);
                    let h = random_invertible(&mut rng, w, 3);
                    vdb_moment(&pair).and_then(|_| vdb_equivariant(&pair, &g, &h))
                }
                None => Err(cyclodaha_quiver::QuiverError::SamplingExhausted(100)),
            };
            c.result(format!("moment equivariance seed {seed} V={v} W={w}"), out);
        }
        for ell in 1..=4usize {
            let ok = (1..=3).try_fold(true, |acc, n| {
                let a: Vec<Mat> = (0..ell).map(|_| random_matrix(&mut rng, n, 1, 3)).collect();
                let b: Vec<Mat> = (0..ell).map(|_| random_matrix(&mut rng, 1, n, 3)).collect();
                Ok::<bool, cyclodaha_quiver::QuiverError>(acc && cell_telescoping(&a, &b)?.holds())
            });
            c.result(format!("cell telescoping seed {seed} l={ell} N<=3"), ok);
        }
    }
}
