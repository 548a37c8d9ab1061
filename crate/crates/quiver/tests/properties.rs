use proptest::prelude::*;

use cyclodaha_core::{Rational, SeedStream};
use cyclodaha_quiver::mat::{random_invertible, random_matrix};
use cyclodaha_quiver::*;

fn zs(l: usize) -> Vec<Rational> {
    [Rational::new(2, 1), Rational::new(3, 5), Rational::new(7, 2), Rational::new(5, 11)][..l].to_vec()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn chain_points_satisfy_every_quadruple_identity(l in 1usize..=4, n in 1usize..=3, seed in any::<u64>()) {
        let p = sample_chain(l, n, &zs(l), &Rational::new(3, 2), seed).unwrap();
        let q = psi(&p).unwrap();
        let (plus, minus) = product_formula_residuals(&q);
        prop_assert!(plus.is_zero() && minus.is_zero());
        prop_assert_eq!(psi(&lift_open_locus(&q).unwrap()).unwrap(), q);
    }

    #[test]
    fn conjugating_a_point_keeps_it_certified(l in 1usize..=3, n in 1usize..=3, seed in any::<u64>()) {
        let p = sample_chain(l, n, &zs(l), &Rational::new(3, 2), seed).unwrap();
        let mut rng = SeedStream::new(seed).child(1).rng();
        let g: Vec<Mat> = (0..l).map(|_| random_invertible(&mut rng, n, 2)).collect();
        let ginv: Vec<Mat> = g.iter().map(|m| m.inverse().unwrap()).collect();
        let mut c = p.clone();
        for i in 0..l {
            let j = (i + 1) % l;
            c.x[i] = &(&g[i] * &p.x[i]) * &ginv[j];
            c.d[i] = &(&g[j] * &p.d[i]) * &ginv[i];
        }
        c.tmat = &(&g[0] * &p.tmat) * &ginv[0];
        prop_assert!(check_point(&c).unwrap().certified());
    }

    #[test]
    fn hanany_witten_round_trip_on_random_bows(seed in any::<u64>(), shape in 0usize..4) {
        let dims = [[1, 1, 1], [2, 2, 2], [1, 2, 1], [2, 1, 1]][shape];
        let bow = sample_bow(dims, &Rational::new(3, 2), &Rational::new(5, 7), &Rational::new(2, 3), seed).unwrap();
        let (there, back, phi) = round_trip(&bow).unwrap();
        prop_assert!(check_bow(&there).unwrap().certified());
        prop_assert!(verify_intertwiner(&bow, &back, &phi.phi));
        prop_assert_eq!(linkage_invariants(&bow.flanked_diagram()), linkage_invariants(&there.flanked_diagram()));
    }

    #[test]
    fn telescoping_identity(ell in 1usize..=4, n in 1usize..=3, seed in any::<u64>()) {
        let mut rng = SeedStream::new(seed).rng();
        let a: Vec<Mat> = (0..ell).map(|_| random_matrix(&mut rng, n, 1, 4)).collect();
        let b: Vec<Mat> = (0..ell).map(|_| random_matrix(&mut rng, 1, n, 4)).collect();
        prop_assert!(cell_telescoping(&a, &b).unwrap().holds());
    }
}
