use cyclodaha_core::laurent::box_monomials;
use cyclodaha_core::{Cyclo, Field, LaurentPoly, Monomial, Rational};
use cyclodaha_ops::expr::build::*;
use cyclodaha_ops::*;

type P = LaurentPoly<Rational>;

fn r(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

fn daha(n: usize, z: Vec<Rational>) -> Rep<Rational> {
    Rep::daha(n, r(7, 5), r(3, 2), z)
}

fn deg(n: usize, z: Vec<Rational>) -> Rep<Rational> {
    Rep::deg(n, r(1, 1), r(2, 7), z).pin(Param::Hbar, r(1, 1))
}

fn mono(e: &[i32]) -> P {
    P::monomial(Monomial(e.to_vec()))
}

fn assert_box(rep: &Rep<Rational>, a: &OperatorExpr, b: &OperatorExpr, radius: i32) {
    let rep_ = op_equal_on_box(rep, a, b, radius).unwrap();
    assert!(rep_.result, "{} != {} on box {radius}: {:?}", a, b, rep_.witness.map(|w| w.monomial));
}

#[test]
fn apply_expr_examples() {
    let d = deg(2, vec![]);
    let pi1 = apply_expr(&d, &parse_expr("pi").unwrap(), &P::one(2)).unwrap();
    assert_eq!(pi1, P::var(2, 0));
    let e = parse_expr("2*X1 + X2").unwrap();
    let v = apply_expr(&daha(2, vec![]), &e, &P::one(2)).unwrap();
    assert_eq!(v, &P::var(2, 0).scale(&r(2, 1)) + &P::var(2, 1));
    let e = parse_expr("Y1 Y1^-1").unwrap();
    let p = mono(&[3, 1]);
    assert_eq!(apply_expr(&daha(2, vec![]), &e, &p).unwrap(), p);
}

#[test]
fn hecke_cross_check_through_t_on_one() {
    // T1 X1 T1 · 1 = 𝐭 · T1 X1 = X2
    let rep = daha(2, vec![]);
    let v = apply_expr(&rep, &parse_expr("T1 X1 T1").unwrap(), &P::one(2)).unwrap();
    assert_eq!(v, P::var(2, 1));
}

#[test]
fn inverse_pairs_compose_to_identity() {
    for n in 2..=3 {
        let rep = daha(n, vec![]);
        let mut pairs = vec![(Gen::Pi, Gen::PiInv), (Gen::Omega, Gen::OmegaInv)];
        for i in 1..=n {
            pairs.push((Gen::X(i), Gen::Xinv(i)));
            pairs.push((Gen::Y(i), Gen::Yinv(i)));
        }
        for i in 1..n {
            pairs.push((Gen::T(i), Gen::Tinv(i)));
        }
        for (a, b) in pairs {
            assert_box(&rep, &w(&[a, b]), &OperatorExpr::one(), 2);
            assert_box(&rep, &w(&[b, a]), &OperatorExpr::one(), 2);
        }
        let d = deg(n, vec![]);
        assert_box(&d, &w(&[Gen::Pi, Gen::PiInv]), &OperatorExpr::one(), 2);
        assert_box(&d, &w(&[Gen::PiInv, Gen::Pi]), &OperatorExpr::one(), 2);
    }
}

#[test]
fn pi_power_is_product_of_variables_in_degenerate_rep() {
    for n in 1..=4 {
        let d = deg(n, vec![]);
        let lhs = g(Gen::Pi).pow(n as u32);
        let rhs = prod(&(1..=n).map(|i| g(Gen::X(i))).collect::<Vec<_>>());
        assert_box(&d, &lhs, &rhs, if n == 4 { 1 } else { 2 });
    }
}

#[test]
fn dunkl_operators_commute() {
    for n in 2..=4 {
        let d = deg(n, vec![]);
        let radius = if n == 4 { 1 } else { 2 };
        for i in 1..=n {
            for j in i + 1..=n {
                let c = g(Gen::Dunkl(i)).commutator(&g(Gen::Dunkl(j)));
                assert_box(&d, &c, &OperatorExpr::zero(), radius);
                let c = g(Gen::Dtrig(i)).commutator(&g(Gen::Dtrig(j)));
                assert_box(&d, &c, &OperatorExpr::zero(), radius);
            }
        }
    }
}

#[test]
fn dunkl_opdam_operators_commute() {
    for l in 2..=3usize {
        for n in 2..=3 {
            let cs = (0..l).map(|j| Cyclo::rational(r(2 * j as i64 + 3, 5))).collect();
            let rep = Rep::cyc_rat(n, l, Cyclo::rational(r(1, 1)), Cyclo::rational(r(3, 11)), cs);
            for i in 1..=n {
                for j in i + 1..=n {
                    let c = g(Gen::DO(i)).commutator(&g(Gen::DO(j)));
                    let rep_ = op_equal_on_box(&rep, &c, &OperatorExpr::zero(), 2).unwrap();
                    assert!(rep_.result, "DO{i}, DO{j} at N={n}, l={l}");
                }
            }
        }
    }
}

#[test]
fn q_dunkl_operators_commute() {
    for n in 2..=3 {
        for l in 1..=2 {
            let z = (0..l).map(|k| r(5 + 2 * k as i64, 3)).collect();
            let rep = daha(n, z);
            for i in 1..=n {
                for j in i + 1..=n {
                    let c = g(Gen::Dl(i)).commutator(&g(Gen::Dl(j)));
                    assert_box(&rep, &c, &OperatorExpr::zero(), 1);
                }
            }
        }
    }
}

#[test]
fn quadratic_relation_on_box() {
    let rep = daha(2, vec![]);
    let a = parse_expr("T1^2").unwrap();
    let b = parse_expr("(tt - tt^-1) T1 + 1").unwrap();
    assert_box(&rep, &a, &b, 3);
    assert_box(&rep, &parse_expr("X1 X2").unwrap(), &parse_expr("X2 X1").unwrap(), 2);
}

#[test]
fn y2_and_x1_do_not_commute() {
    let rep = daha(2, vec![]);
    let a = parse_expr("Y2 X1").unwrap();
    let b = parse_expr("X1 Y2").unwrap();
    let report = op_equal_on_box(&rep, &a, &b, 2).unwrap();
    assert!(!report.result);
    let json = report_json(&report);
    assert_eq!(json["mode"], "box");
    assert!(json["witness"].is_object());
    let wit = report.witness.unwrap();
    let p = P::monomial(wit.monomial.clone());
    assert_eq!(apply_expr(&rep, &a, &p).unwrap(), wit.lhs);
    assert_eq!(apply_expr(&rep, &b, &p).unwrap(), wit.rhs);
    assert_ne!(wit.lhs, wit.rhs);
}

fn report_json(r: &EqualityReport<Rational>) -> serde_json::Value {
    r.to_json()
}

#[test]
fn randomized_examples() {
    let l1 = daha(3, vec![r(1, 1)]).pin(Param::Z(1), r(1, 1));
    let a = parse_expr("D1^(l) X1 + 1").unwrap();
    let b = parse_expr("q T1 T2 T2 T1 (X1 D1^(l) + 1)").unwrap();
    let rep_ = op_equal_randomized(&l1, &a, &b, 50, 11, 3).unwrap();
    assert!(rep_.result);

    let l2 = daha(2, vec![r(5, 3), r(11, 7)]);
    let a = parse_expr("X1 D1^(l)").unwrap();
    let b = parse_expr("(Y1 - Z1)(Y1 - Z2)").unwrap();
    assert!(op_equal_randomized(&l2, &a, &b, 50, 3, 3).unwrap().result);

    let d = deg(3, vec![]);
    let a = parse_expr("s1 s2 s1").unwrap();
    let b = parse_expr("s2 s1 s2").unwrap();
    assert!(op_equal_randomized(&d, &a, &b, 20, 5, 3).unwrap().result);
}

#[test]
fn randomized_detects_a_wrong_relation() {
    let rep = daha(2, vec![]);
    let a = parse_expr("Y2 X1").unwrap();
    let b = parse_expr("X1 Y2").unwrap();
    let rep_ = op_equal_randomized(&rep, &a, &b, 10, 1, 3).unwrap();
    assert!(!rep_.result);
    assert_eq!(rep_.to_json()["mode"], "random");
}

#[test]
fn family_mismatch_is_an_error() {
    let d = deg(2, vec![]);
    let err = apply_generator(&d, Gen::T(1), &P::one(2)).unwrap_err();
    assert!(matches!(err, OpsError::FamilyMismatch { .. }));
    let err = apply_generator(&daha(2, vec![]), Gen::T(2), &P::one(2)).unwrap_err();
    assert!(matches!(err, OpsError::IndexOutOfRange { .. }));
}

/// With `Z_1 = q^u` the operators `π₋` and `D_i^{(l)}` keep `(X_1…X_N)^u P₊` invariant.
#[test]
fn cyclotomic_generators_preserve_shifted_polynomials() {
    let q = r(7, 5);
    for n in 2..=3usize {
        for u in 0..=1i32 {
            for l in 1..=2usize {
                let mut z = vec![q.pow(u as i64).unwrap()];
                if l == 2 {
                    z.push(r(13, 3));
                }
                let rep = daha(n, z);
                let mut gens = vec![Gen::PiMinus];
                gens.extend((1..=n).map(Gen::Dl));
                for e in box_monomials(n, 2).into_iter().filter(|m| m.is_polynomial()) {
                    let shifted = Monomial(e.0.iter().map(|x| x + u).collect());
                    let p = P::monomial(shifted);
                    for g0 in &gens {
                        let out = apply_generator(&rep, *g0, &p).unwrap();
                        for (m, _) in out.terms() {
                            assert!(m.0.iter().all(|&x| x >= u), "{g0} on {p}: {out}");
                        }
                    }
                }
            }
            let d = Rep::deg(n, r(1, 1), r(2, 7), vec![Rational::from_i64(u as i64), r(5, 3)]);
            for e in box_monomials(n, 2).into_iter().filter(|m| m.is_polynomial()) {
                let shifted = Monomial(e.0.iter().map(|x| x + u).collect());
                let p = P::monomial(shifted);
                for g0 in [Gen::PiMinus, Gen::Dl(1), Gen::Dl(n)] {
                    let out = apply_generator(&d, g0, &p).unwrap();
                    assert!(out.terms().all(|(m, _)| m.0.iter().all(|&x| x >= u)), "{g0} on {p}: {out}");
                }
            }
        }
    }
}
