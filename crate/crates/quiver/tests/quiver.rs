use cyclodaha_core::{Field, Rational, SeedStream};
use cyclodaha_quiver::mat::{random_invertible, random_matrix};
use cyclodaha_quiver::*;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn zs(l: usize) -> Vec<Rational> {
    [r(2, 1), r(3, 5), r(7, 2), r(5, 11)][..l].to_vec()
}

fn t() -> Rational {
    r(3, 2)
}

#[test]
fn trivial_point_certifies() {
    let p = QuiverPoint {
        l: 1,
        n: 1,
        z: vec![r(1, 1)],
        t: t(),
        x: vec![Mat::zeros(1, 1)],
        d: vec![Mat::zeros(1, 1)],
        tmat: Mat::identity(1),
    };
    let rep = check_point(&p).unwrap();
    assert!(rep.certified());
    assert_eq!(rep.t_class, TClass::Special);
}

#[test]
fn product_formulas_on_chain_points() {
    for l in 1..=4 {
        for n in 1..=3 {
            for seed in 0..10 {
                let p = sample_chain(l, n, &zs(l), &t(), seed).unwrap();
                assert!(check_point(&p).unwrap().certified());
                let q = psi(&p).unwrap();
                let (plus, minus) = product_formula_residuals(&q);
                assert!(plus.is_zero() && minus.is_zero(), "l={l} N={n} seed={seed}");
                assert!(check_quadruple(&q).certified());
            }
        }
    }
}

#[test]
fn scalar_chain_has_trivial_t() {
    for l in 1..=4 {
        let p = sample_chain(l, 1, &zs(l), &t(), 3).unwrap();
        let expected = (p.z[l - 1].clone() * (p.d[l - 1].get(0, 0).clone() * p.x[l - 1].get(0, 0) + Rational::one()))
            .div(&(p.z[0].clone() * (p.x[0].get(0, 0).clone() * p.d[0].get(0, 0) + Rational::one())))
            .unwrap();
        assert_eq!(p.tmat.get(0, 0), &expected);
        assert!(expected.is_one());
        assert_eq!(check_point(&p).unwrap().t_class, TClass::Special);
    }
}

#[test]
fn l1_chain_matches_closed_form_and_psi_is_repackaging() {
    let p = sample_chain(1, 2, &zs(1), &t(), 5).unwrap();
    let one = Mat::identity(2);
    let expected = &(&one + &(&p.x[0] * &p.d[0])).inverse().unwrap() * &(&one + &(&p.d[0] * &p.x[0]));
    assert_eq!(p.tmat, expected);
    let q = psi(&p).unwrap();
    assert_eq!(q.x, p.x[0]);
    assert_eq!(q.d, p.d[0]);
    assert_eq!(lift_open_locus(&q).unwrap(), p);
}

#[test]
fn one_by_one_l1_relation_is_vacuous() {
    // With l = N = 1 and T = 1 the closing relation reads 1 + xd = 1 + dx.
    let p = sample_chain(1, 1, &zs(1), &t(), 0).unwrap();
    assert!(check_point(&p.bumped(0, 0, 0)).unwrap().certified());
}

#[test]
fn perturbed_points_are_caught() {
    for (l, n, seed) in [(1, 2, 0), (2, 1, 1), (2, 2, 1), (3, 2, 9), (4, 3, 4)] {
        let p = sample_chain(l, n, &zs(l), &t(), seed).unwrap();
        for i in 0..l {
            let bad = p.bumped(i, 0, n - 1);
            let rep = check_point(&bad).unwrap();
            assert!(!rep.certified(), "bump in X_{} missed", i + 1);
            assert!(matches!(psi(&bad), Err(QuiverError::Uncertified(_))));
        }
    }
}

#[test]
fn lift_round_trips_on_the_open_locus() {
    for l in 1..=4 {
        for n in 1..=3 {
            for seed in 0..4 {
                let p = sample_chain(l, n, &zs(l), &t(), seed).unwrap();
                let q = psi(&p).unwrap();
                let lifted = lift_open_locus(&q).unwrap();
                assert!(check_point(&lifted).unwrap().certified());
                let q2 = psi(&lifted).unwrap();
                assert_eq!(q2, q);
                assert_eq!(psi(&lift_open_locus(&q2).unwrap()).unwrap(), q2);
                let g = lift_intertwiner(&p, &lifted).unwrap();
                assert_eq!(g.len(), l);
            }
        }
    }
}

#[test]
fn last_arrow_built_from_z1_fails_to_certify() {
    // With D_l = X⁻¹(Z_1⁻¹Y − 1) in place of X⁻¹(Z_l⁻¹Y − 1), the relation at
    // vertex l breaks as soon as Z_1 ≠ Z_l.
    let p = sample_chain(2, 2, &zs(2), &t(), 7).unwrap();
    let q = psi(&p).unwrap();
    let mut lifted = lift_open_locus(&q).unwrap();
    let y = q.y.scale(&q.z[0].inv().unwrap());
    lifted.d[1] = &q.x.inverse().unwrap() * &(&y - &Mat::identity(2));
    assert!(!check_point(&lifted).unwrap().certified());
}

#[test]
fn singular_x_is_rejected_by_the_lift() {
    let mut p = sample_chain(1, 1, &zs(1), &t(), 0).unwrap();
    p.x[0] = Mat::zeros(1, 1);
    p.tmat = QuiverPoint::derive_t(1, &p.z, &p.x, &p.d).unwrap();
    let q = psi(&p).unwrap();
    assert_eq!(lift_open_locus(&q), Err(QuiverError::XNotInvertible));
}

#[test]
fn point_json_round_trip_and_derived_t() {
    let p = sample_chain(3, 2, &zs(3), &t(), 9).unwrap();
    let v = p.to_json();
    assert_eq!(QuiverPoint::from_json(&v).unwrap(), p);
    let mut without_t = v.clone();
    without_t.as_object_mut().unwrap().remove("T");
    assert_eq!(QuiverPoint::from_json(&without_t).unwrap(), p);
    let q = psi(&p).unwrap();
    assert_eq!(Quadruple::from_json(&q.to_json()).unwrap(), q);
}

#[test]
fn irreducibility_examples() {
    let p = sample_chain(1, 1, &zs(1), &t(), 2).unwrap();
    assert!(irreducibility_check(&psi(&p).unwrap()).is_irreducible());
    let p = sample_chain(1, 2, &zs(1), &t(), 5).unwrap();
    assert!(irreducibility_check(&psi(&p).unwrap()).is_irreducible());
    // Chain points carry an unconstrained T, so small integer draws can be
    // reducible; any answer must then come with a genuine witness.
    for seed in 0..12 {
        let q = psi(&sample_chain(1, 2, &zs(1), &t(), seed).unwrap()).unwrap();
        if let Irreducibility::Reducible { witness } = irreducibility_check(&q) {
            assert!(is_invariant(&witness, &[&q.x, &q.d, &q.y, &q.tmat]), "seed {seed}");
        }
    }
    // Block-diagonal by hand: every generator preserves the first axis.
    let diag = |a: i64, b: i64| Mat::from_rows(vec![vec![r(a, 1), Rational::zero()], vec![Rational::zero(), r(b, 1)]]);
    let q = Quadruple {
        n: 2,
        z: zs(1),
        t: t(),
        x: diag(1, 2),
        d: diag(3, 0),
        y: diag(2, 5),
        tmat: diag(1, 1),
    };
    match irreducibility_check(&q) {
        Irreducibility::Reducible { witness } => {
            assert_eq!(witness.cols(), 1);
            assert!(is_invariant(&witness, &[&q.x, &q.d, &q.y, &q.tmat]));
        }
        other => panic!("expected a witness, got {other:?}"),
    }
    // An upper-triangular matrix fixes the first axis.
    let up = Mat::from_rows(vec![vec![r(1, 1), r(1, 1)], vec![Rational::zero(), r(2, 1)]]);
    let res = irreducibility_of(2, &[&up], &[]);
    assert!(matches!(res, Irreducibility::Reducible { .. }));
}

#[test]
fn rational_irreducible_but_complex_reducible_is_inconclusive() {
    // A rotation by 90° has no rational invariant line but is reducible over ℂ.
    let rot = Mat::from_rows(vec![vec![Rational::zero(), r(-1, 1)], vec![r(1, 1), Rational::zero()]]);
    assert_eq!(irreducibility_of(2, &[&rot], &[]), Irreducibility::Inconclusive { algebra_dim: 2 });
}

#[test]
fn vdb_moment_examples() {
    let p = VdBPair::new(Mat::zeros(2, 3), Mat::zeros(3, 2)).unwrap();
    let (m1, m2) = vdb_moment(&p).unwrap();
    assert_eq!((m1, m2), (Mat::identity(3), Mat::identity(2)));
    let (x, y) = (r(2, 3), r(5, 7));
    let s = VdBPair::new(Mat::scalar(1, x.clone()), Mat::scalar(1, y.clone())).unwrap();
    let (m1, m2) = vdb_moment(&s).unwrap();
    let xy = x * &y + Rational::one();
    assert_eq!(m1.get(0, 0), &xy.inv().unwrap());
    assert_eq!(m2.get(0, 0), &xy);
    assert!(matches!(
        VdBPair::new(Mat::scalar(1, r(1, 1)), Mat::scalar(1, r(-1, 1))),
        Err(QuiverError::SingularFactor(_))
    ));
}

#[test]
fn vdb_equivariance_and_cell_telescoping() {
    for seed in 0..5u64 {
        let mut rng = SeedStream::new(seed).rng();
        for (v, w) in [(1, 1), (2, 3), (3, 2)] {
            let pair = loop {
                if let Ok(p) = VdBPair::new(random_matrix(&mut rng, w, v, 3), random_matrix(&mut rng, v, w, 3)) {
                    break p;
                }
            };
            let g = random_invertible(&mut rng, v, 3);
            let h = random_invertible(&mut rng, w, 3);
            assert!(vdb_equivariant(&pair, &g, &h).unwrap());
        }
        for ell in 1..=4 {
            for n in 1..=3 {
                let a: Vec<Mat> = (0..ell).map(|_| random_matrix(&mut rng, n, 1, 3)).collect();
                let b: Vec<Mat> = (0..ell).map(|_| random_matrix(&mut rng, 1, n, 3)).collect();
                let rep = cell_telescoping(&a, &b).unwrap();
                assert!(rep.holds(), "ell={ell} n={n} seed={seed}");
            }
        }
    }
}

#[test]
fn fused_moment_matches_the_cyclic_quiver_relations() {
    // Orientation 1 → l → … → 2 → 1: arrow i carries X_i: V_{i+1} → V_i and
    // its star carries D_i. With N = 1 the closing operator is trivial and
    // one framing pair with 1 + ab = t realises it.
    for l in 1..=4 {
        let z = zs(l);
        let p = sample_chain(l, 1, &z, &t(), 11).unwrap();
        let quiver = FramedQuiver {
            dims: vec![1; l],
            arrows: (0..l).map(|i| ((i + 1) % l, i)).collect(),
            framing: std::iter::once(1).chain(std::iter::repeat(0)).take(l).collect(),
        };
        let mut a = vec![Vec::new(); l];
        let mut b = vec![Vec::new(); l];
        a[0].push(Mat::scalar(1, t() - Rational::one()));
        b[0].push(Mat::identity(1));
        let data = FramedData { c: p.x.clone(), cstar: p.d.clone(), a, b };
        let mut order = vec![HalfArrow::Star(l - 1)];
        order.extend((0..l).map(HalfArrow::Plain));
        order.extend((0..l - 1).map(HalfArrow::Star));
        let (mu, nu) = fusion_moment(&quiver, &data, &order).unwrap();
        let mut gamma = vec![z[l - 1].clone() * t() * z[0].inv().unwrap()];
        gamma.extend((1..l).map(|i| z[i - 1].clone() * z[i].inv().unwrap()));
        for i in 0..l {
            assert_eq!(mu[i], Mat::scalar(1, gamma[i].clone()), "vertex {} with l={l}", i + 1);
        }
        assert_eq!(nu[0], vec![t().inv().unwrap()]);
    }
}

#[test]
fn default_order_lists_plain_arrows_first() {
    let q = FramedQuiver { dims: vec![1, 1], arrows: vec![(0, 1)], framing: vec![0, 0] };
    assert_eq!(default_order(&q), vec![HalfArrow::Plain(0), HalfArrow::Star(0)]);
}
