use cyclodaha_core::laurent::Subst;
use cyclodaha_core::sampling::satisfies;
use cyclodaha_core::series::series_expand_on_hyperplane;
use cyclodaha_core::upoly::UPoly;
use cyclodaha_core::{cyclo_normalize, Constraint, Cyclo, Field, LaurentPoly, Monomial, RatFunc, Rational, SampleSpec};
use cyclodaha_core::ratfunc::{ratfunc_simplify, Var};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..20).prop_map(|(n, d)| Rational::new(n, d))
}

fn cyclo(l: u32) -> impl Strategy<Value = Cyclo> {
    prop::collection::vec(rat(), l as usize).prop_map(move |v| cyclo_normalize(&v, l))
}

fn upoly() -> impl Strategy<Value = UPoly> {
    prop::collection::vec(-5i64..6, 1..4).prop_map(|v| UPoly::from_i64s(&v))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (upoly(), upoly()).prop_filter_map("nonzero denominator", |(n, d)| ratfunc_simplify(Var::T, &n, &d).ok())
}

fn poly(n: usize) -> impl Strategy<Value = LaurentPoly<Rational>> {
    prop::collection::vec((prop::collection::vec(-2i32..3, n), rat()), 0..5)
        .prop_map(move |ts| LaurentPoly::from_terms(n, ts.into_iter().map(|(e, c)| (Monomial(e), c))))
}

fn check_field_axioms<F: Field>(a: &F, b: &F, c: &F) {
    assert_eq!((a.clone() + b) + c, a.clone() + &(b.clone() + c));
    assert_eq!((a.clone() * b) * c, a.clone() * &(b.clone() * c));
    assert_eq!(a.clone() * &(b.clone() + c), a.clone() * b + a.clone() * c);
    assert_eq!(a.clone() * b, b.clone() * a);
    assert_eq!(a.clone() - a, F::zero());
    if let Some(ai) = a.inv() {
        assert!((a.clone() * &ai).is_one());
    } else {
        assert!(a.is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_field_axioms(a in rat(), b in rat(), c in rat()) {
        check_field_axioms(&a, &b, &c);
    }

    #[test]
    fn cyclo_field_axioms((a, b, c) in (1u32..9).prop_flat_map(|l| (cyclo(l), cyclo(l), cyclo(l + 1)))) {
        check_field_axioms(&a, &b, &c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        check_field_axioms(&a, &b, &c);
    }

    #[test]
    fn low_order_cyclo_agrees_with_rationals(a in rat(), b in rat(), x in rat(), y in rat()) {
        // a + bζ with ζ_1 = 1 and ζ_2 = -1
        for (l, z) in [(1u32, Rational::one()), (2, -Rational::one())] {
            let u = cyclo_normalize(&[a.clone(), b.clone()], l);
            let v = cyclo_normalize(&[x.clone(), y.clone()], l);
            let ur = &a + &(&b * &z);
            let vr = &x + &(&y * &z);
            prop_assert_eq!(u.clone() * &v, Cyclo::rational(&ur * &vr));
            prop_assert_eq!(u + &v, Cyclo::rational(&ur + &vr));
        }
    }

    #[test]
    fn laurent_ring_axioms(a in poly(3), b in poly(3), c in poly(3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_divide_recovers_factor(p in poly(2), d in poly(2)) {
        prop_assume!(!d.is_zero());
        let pd = &p * &d;
        prop_assert_eq!(pd.exact_divide(&d).unwrap(), p);
    }

    #[test]
    fn substitution_composes(p in poly(2), a in rat(), b in rat()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let once = p.scale_var(0, &a).unwrap().scale_var(0, &b).unwrap();
        prop_assert_eq!(once, p.scale_var(0, &(&a * &b)).unwrap());
    }

    #[test]
    fn series_constant_term_is_restriction(p in poly(3)) {
        let s = series_expand_on_hyperplane(&p, 0, 2, 3);
        let r = p.substitute(&[Subst::keep(0), Subst::keep(1), Subst::keep(0)]).unwrap();
        prop_assert_eq!(s.constant_term(), &r);
    }

    #[test]
    fn symmetrize_idempotent(p in poly(3)) {
        let s = p.symmetrize();
        prop_assert!(s.is_symmetric());
        prop_assert_eq!(s.symmetrize(), s);
    }

    #[test]
    fn sampling_is_deterministic_and_valid(seed in any::<u64>()) {
        let spec = SampleSpec::new(3)
            .all_nonzero()
            .with(Constraint::NotRootOfUnity { var: 0, max_order: 24 })
            .with(Constraint::DifferencesNotInteger { i: 1, j: 2, window: 10 });
        let a = cyclodaha_core::sample_generic(&spec, seed).unwrap();
        prop_assert_eq!(&a, &cyclodaha_core::sample_generic(&spec, seed).unwrap());
        prop_assert!(spec.constraints.iter().all(|c| satisfies(c, &a)));
    }
}

#[test]
fn ratfunc_geometric_sum_symbolic() {
    let t = RatFunc::var(Var::T);
    for n in 1..=4i64 {
        let lhs = (RatFunc::one() - t.pow(n).unwrap()).div(&(RatFunc::one() - t.clone())).unwrap();
        let mut rhs = RatFunc::zero();
        for i in 0..n {
            rhs = rhs + t.pow(i).unwrap();
        }
        assert_eq!(lhs, rhs);
    }
}
