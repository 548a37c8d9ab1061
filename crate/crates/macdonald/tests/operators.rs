use cyclodaha_algebra::{involution_image, Involution};
use cyclodaha_core::ratfunc::Var;
use cyclodaha_core::{Field, LaurentPoly, Monomial, RatFunc, Rational, UPoly};
use cyclodaha_macdonald::*;
use cyclodaha_ops::expr::build::*;
use cyclodaha_ops::{apply_expr, op_equal_on_box, Gen, OperatorExpr, Param, Rep};

type P = LaurentPoly<Rational>;

fn r(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

fn daha(n: usize, z: Vec<Rational>) -> Rep<Rational> {
    Rep::daha(n, r(7, 5), r(3, 2), z)
}

fn same(rep: &Rep<Rational>, a: &OperatorExpr, b: &OperatorExpr, radius: i32) {
    let rep_ = op_equal_on_box(rep, a, b, radius).unwrap();
    assert!(rep_.result, "{a} != {b}: {:?}", rep_.witness.map(|w| w.monomial));
}

#[test]
fn y_f_shapes() {
    let rep = daha(3, vec![]);
    let f = PolyParam::from_rationals(&[r(-2, 3), r(1, 1)]);
    assert_eq!(y_f(&rep, 1, &f).unwrap(), g(Gen::Y(1)).compose(&f.at_x1_inverse()));
    for i in 1..=3 {
        same(&rep, &y_f(&rep, i, &PolyParam::one()).unwrap(), &g(Gen::Y(i)), 1);
    }
    assert!(matches!(y_f(&rep, 4, &f), Err(MacError::IndexOutOfRange { .. })));
}

#[test]
fn y_on_one_is_a_power_of_t() {
    for n in 1..=4 {
        let rep = daha(n, vec![]);
        let t = r(9, 4);
        for i in 1..=n {
            let out = apply_expr(&rep, &g(Gen::Y(i)), &P::one(n)).unwrap();
            assert_eq!(out, P::constant(n, t.pow(i as i64 - 1).unwrap()));
        }
    }
}

#[test]
fn cherednik_image_of_y_f_is_the_q_dunkl_operator() {
    for n in 2..=3 {
        for l in 1..=2 {
            let rep = daha(n, (0..l).map(|k| r(5 + 2 * k as i64, 3)).collect());
            let f = PolyParam::cyclotomic(l);
            for i in 1..=n {
                let img = involution_image(Involution::Cherednik, &y_f(&rep, i, &f).unwrap(), n).unwrap();
                same(&rep, &img, &g(Gen::Dl(i)), 1);
            }
        }
    }
}

#[test]
fn hecke_symmetrizer_is_the_t_projector() {
    for n in 2..=3 {
        let rep = daha(n, vec![]);
        let e = hecke_symmetrizer(n);
        same(&rep, &e.compose(&e), &e, 2);
        for i in 1..n {
            let te = g(Gen::T(i)).compose(&e);
            same(&rep, &te, &p(Param::Tt).compose(&e), 2);
            same(&rep, &e.compose(&g(Gen::T(i))), &p(Param::Tt).compose(&e), 2);
        }
        for s in symmetric_basis::<Rational>(n, 3) {
            assert_eq!(hecke_symmetrize(&rep, &s).unwrap(), s);
        }
        let x1 = P::var(n, 0);
        assert!(hecke_symmetrize(&rep, &x1).unwrap().is_symmetric());
    }
}

#[test]
fn macdonald_identity_on_symmetric_polynomials() {
    for n in 1..=3 {
        let rep = daha(n, vec![]);
        let ys = sum(&(1..=n).map(|i| g(Gen::Y(i))).collect::<Vec<_>>());
        let op = ys.compose(&hecke_symmetrizer(n));
        for s in symmetric_basis::<Rational>(n, 5) {
            let lhs = apply_expr(&rep, &op, &s).unwrap();
            assert_eq!(lhs, macdonald_m1(&rep, &s).unwrap(), "N={n}, p={s}");
        }
    }
}

#[test]
fn macdonald_operator_in_one_variable_is_the_shift() {
    let rep = daha(1, vec![]);
    let p = &P::var(1, 0).pow(3) + &P::one(1);
    let expect = &P::var(1, 0).pow(3).scale(&r(343, 125)) + &P::one(1);
    assert_eq!(macdonald_m1(&rep, &p).unwrap(), expect);
    let out = m1_l1(&rep, &p).unwrap();
    assert_eq!(out, P::var(1, 0).pow(2).scale(&r(343 - 125, 125)));
}

#[test]
fn macdonald_on_one_symbolically_in_t() {
    let t = RatFunc::var(Var::T);
    let q = RatFunc::constant(r(7, 5));
    for n in 1..=4 {
        let one = LaurentPoly::<RatFunc>::one(n);
        let out = macdonald_m1_at(&q, &t, &one).unwrap();
        let mut num = vec![Rational::from_i64(1)];
        num.extend(std::iter::repeat(Rational::from_i64(0)).take(n - 1));
        num.push(Rational::from_i64(-1));
        let expect = cyclodaha_core::ratfunc_simplify(Var::T, &UPoly::new(num), &UPoly::from_i64s(&[1, -1])).unwrap();
        assert_eq!(out, LaurentPoly::constant(n, expect), "N={n}");
    }
}

#[test]
fn non_symmetric_input_is_rejected() {
    let rep = daha(2, vec![]);
    let x1 = P::var(2, 0);
    assert!(matches!(macdonald_m1(&rep, &x1), Err(MacError::InputNotSymmetric)));
    assert!(matches!(m1_l1(&rep, &x1), Err(MacError::InputNotSymmetric)));
    assert_eq!(m1_l1(&rep, &P::one(2)).unwrap(), P::zero(2));
}

#[test]
fn y_f_family_commutes() {
    let fs = [
        PolyParam::one(),
        PolyParam::from_rationals(&[r(-1, 1), r(1, 1)]),
        PolyParam::from_rationals(&[r(3, 7), r(-2, 1), r(1, 1)]),
    ];
    for n in 2..=3 {
        let rep = daha(n, vec![]);
        for f in &fs {
            for i in 1..=n {
                for j in i + 1..=n {
                    let c = y_f(&rep, i, f).unwrap().commutator(&y_f(&rep, j, f).unwrap());
                    same(&rep, &c, &OperatorExpr::zero(), 1);
                }
            }
        }
    }
}

#[test]
fn hamiltonians_preserve_symmetric_polynomials() {
    for n in 2..=3 {
        let rep = daha(n, vec![r(5, 3)]);
        for rr in 1..=n {
            let h = hamiltonian(&rep, rr, &PolyParam::from_rationals(&[r(-5, 3), r(1, 1)]), 5).unwrap();
            assert_eq!(h.certified_degree, 5);
        }
    }
    let rep = daha(2, vec![]);
    let h = hamiltonian(&rep, 1, &PolyParam::one(), 3).unwrap();
    assert!(matches!(h.apply(&rep, &P::var(2, 0)), Err(MacError::InputNotSymmetric)));
}

fn run(rep: &Rep<Rational>, h: &SymmetricOperator, p: &P) -> P {
    apply_expr(rep, &h.expr, p).unwrap()
}

#[test]
fn cyclotomic_hamiltonians_commute_on_symmetric_inputs() {
    let rep = daha(3, vec![r(1, 1)]).pin(Param::Z(1), r(1, 1));
    let f = PolyParam::cyclotomic(1);
    let m1 = cyclotomic_hamiltonian(&rep, 1, &f, 3).unwrap();
    let m2 = cyclotomic_hamiltonian(&rep, 2, &f, 3).unwrap();
    for s in symmetric_basis::<Rational>(3, 3) {
        assert_eq!(run(&rep, &m1, &run(&rep, &m2, &s)), run(&rep, &m2, &run(&rep, &m1, &s)));
    }
}

#[test]
fn explicit_l1_formula_matches_cyclotomic_hamiltonian() {
    for n in 1..=3 {
        let rep = daha(n, vec![r(1, 1)]).pin(Param::Z(1), r(1, 1));
        let f = PolyParam::from_rationals(&[r(-1, 1), r(1, 1)]);
        let m = cyclotomic_hamiltonian(&rep, 1, &f, 2).unwrap();
        for s in symmetric_basis::<Rational>(n, 4) {
            assert_eq!(run(&rep, &m, &s), m1_l1(&rep, &s).unwrap(), "N={n}, p={s}");
        }
    }
}

#[test]
fn e_r_is_the_subset_sum() {
    let xs: Vec<OperatorExpr> = (1..=3).map(|i| g(Gen::X(i))).collect();
    let e2 = elementary_symmetric(2, &xs);
    assert_eq!(e2.len(), 3);
    let rep = daha(3, vec![]);
    let v = apply_expr(&rep, &e2, &P::one(3)).unwrap();
    let expect = P::monomial(Monomial(vec![1, 1, 0])).symmetrize().scale(&r(3, 1));
    assert_eq!(v, expect);
}
