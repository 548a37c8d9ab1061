use cyclodaha_core::{Field, LaurentPoly, Monomial, Rational};
use cyclodaha_quasiinv::*;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-9i64..10, 1i64..7).prop_map(|(a, b)| Rational::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn common_shift_of_twists_changes_nothing(a in rat(), c in rat(), m in 0u32..3) {
        let base = QuasiSpec::twisted(m, vec![a.clone(), Rational::zero()]);
        let shifted = QuasiSpec::twisted(m, vec![&a + &c, c.clone()]);
        let d1 = graded_basis::<Rational>(&base, 6).unwrap().dims();
        let d2 = graded_basis::<Rational>(&shifted, 6).unwrap().dims();
        prop_assert_eq!(d1, d2);
    }

    #[test]
    fn combinations_of_basis_elements_stay_inside(q in rat(), m in 1u32..3, cs in prop::collection::vec(-4i64..5, 12)) {
        prop_assume!(!q.is_zero() && q != Rational::from_i64(-1));
        let s = QuasiSpec::plain_q(3, m, q);
        let b = degree_basis::<Rational>(&s, 4).unwrap();
        let mut f = LaurentPoly::zero(3);
        for (p, c) in b.iter().zip(&cs) {
            f = &f + &p.scale(&Rational::from_i64(*c));
        }
        prop_assert!(satisfies(&s, &f).unwrap());
    }

    #[test]
    fn multiples_of_the_ideal_generator_are_quasiinvariant(q in rat(), e in prop::collection::vec(0i32..3, 2)) {
        prop_assume!(!q.is_zero() && q != Rational::from_i64(-1));
        let s = QuasiSpec::plain_q(2, 1, q.clone());
        let g = ideal_generator(2, 1, &q).shift(&Monomial(e));
        prop_assert!(satisfies(&s, &g).unwrap());
    }

    #[test]
    fn kostka_specialises_to_dimension(n in 1usize..7) {
        for p in kostka::partitions_of(n) {
            prop_assert_eq!(kostka(&p).iter().sum::<i64>(), kostka::dimension(&p) as i64);
        }
    }
}
