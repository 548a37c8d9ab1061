use cyclodaha_core::{LaurentPoly, Rational};
use cyclodaha_macdonald::*;
use cyclodaha_ops::expr::build::*;
use cyclodaha_ops::{apply_expr, Gen, Rep};
use proptest::prelude::*;

fn nonzero_param() -> impl Strategy<Value = Rational> {
    (2i64..9, 1i64..9, any::<bool>()).prop_map(|(a, b, s)| Rational::new(if s { a } else { -a }, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn y_sum_on_symmetric_polys_is_macdonald(q in nonzero_param(), tt in nonzero_param(), n in 1usize..=3, cs in prop::collection::vec(-3i64..4, 10)) {
        let rep = Rep::daha(n, q, tt, vec![]);
        let basis = symmetric_basis::<Rational>(n, 3);
        let mut p = LaurentPoly::zero(n);
        for (b, c) in basis.iter().zip(&cs) {
            p = &p + &b.scale(&Rational::from_i64(*c));
        }
        let ys = sum(&(1..=n).map(|i| g(Gen::Y(i))).collect::<Vec<_>>());
        let lhs = apply_expr(&rep, &ys.compose(&hecke_symmetrizer(n)), &p).unwrap();
        prop_assert_eq!(lhs, macdonald_m1(&rep, &p).unwrap());
    }

    #[test]
    fn symmetrizer_is_idempotent_and_lands_in_symmetric(tt in nonzero_param(), n in 2usize..=3, e in prop::collection::vec(-2i32..3, 3)) {
        let rep = Rep::daha(n, Rational::new(5, 3), tt, vec![]);
        let m = LaurentPoly::<Rational>::monomial(cyclodaha_core::Monomial(e[..n].to_vec()));
        let once = hecke_symmetrize(&rep, &m).unwrap();
        prop_assert!(once.is_symmetric());
        prop_assert_eq!(hecke_symmetrize(&rep, &once).unwrap(), once);
    }
}
