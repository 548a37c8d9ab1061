use cyclodaha_core::{Cyclo, Field, LaurentPoly, Matrix, Rational};
use cyclodaha_quasiinv::kostka::{character, charge, conjugate, content, dimension, partitions_of};
use cyclodaha_quasiinv::*;

type P = LaurentPoly<Rational>;

fn r(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

fn dims(spec: &QuasiSpec, maxdeg: usize) -> Vec<i64> {
    hilbert(&graded_basis::<Rational>(spec, maxdeg).unwrap()).coeffs
}

fn closed(num: &[i64], den: &[usize], len: usize) -> Vec<i64> {
    HilbertSeries::rational(num, den, len).coeffs
}

fn mono(e: &[i32]) -> P {
    P::monomial(cyclodaha_core::Monomial(e.to_vec()))
}

#[test]
fn degree_zero_has_no_conditions() {
    let s = QuasiSpec::plain_q(2, 1, r(3, 2));
    let a: Matrix<Rational> = conditions_matrix(&s, 0).unwrap();
    assert_eq!(a.rows(), 0);
    assert_eq!(dims(&s, 0), vec![1]);
}

#[test]
fn q_cubic_example() {
    let q = r(3, 2);
    let s = QuasiSpec::plain_q(2, 1, q.clone());
    let (x1, x2) = (P::var(2, 0), P::var(2, 1));
    let mut f = &x1 - &x2;
    f = &f * &(&x1 - &x2.scale(&q));
    f = &f * &(&x1 - &x2.scale(&q.inv().unwrap()));
    assert!(satisfies(&s, &f).unwrap());
    assert!(satisfies(&s, &(&x1.pow(3) + &x2.pow(3))).unwrap());
    assert!(satisfies(&s, &(&mono(&[2, 1]) + &mono(&[1, 2]))).unwrap());
    assert!(!satisfies(&s, &(&x1 - &x2).pow(3)).unwrap());
    let basis: Vec<P> = degree_basis(&s, 3).unwrap();
    // symmetric cubics (2) plus the product above
    assert_eq!(basis.len(), 3);
    let a: Matrix<Rational> = conditions_matrix(&s, 3).unwrap();
    let v: Vec<Rational> = columns(&s, 3).iter().map(|e| f.coeff(e)).collect();
    assert!(a.apply(&v).iter().all(|x| x.is_zero()));
}

#[test]
fn no_conditions_gives_all_polynomials() {
    let s = QuasiSpec::plain_q(2, 0, r(5, 3));
    assert_eq!(dims(&s, 6), vec![1, 2, 3, 4, 5, 6, 7]);
    let s = QuasiSpec::plain_q(2, 0, Rational::one());
    assert_eq!(dims(&s, 6), vec![1, 2, 3, 4, 5, 6, 7]);
}

#[test]
fn twisted_two_variable_series() {
    // integral a in [0, m−1]
    let s = QuasiSpec::twisted(2, vec![r(1, 1), r(0, 1)]);
    assert_eq!(dims(&s, 10), closed(&[0, 1, 0, 0, 1], &[1, 2], 11));
    // generic a
    for m in 1..=2u32 {
        let s = QuasiSpec::twisted(m, vec![r(1, 2), r(0, 1)]);
        let mut num = vec![0; m as usize + 1];
        num[m as usize] = 1;
        assert_eq!(dims(&s, 10), closed(&num, &[1, 1], 11), "m = {m}");
    }
    // a = 0 is the untwisted case
    for m in 0..=2u32 {
        let s = QuasiSpec::twisted(m, vec![r(0, 1), r(0, 1)]);
        let mut num = vec![0; 2 * m as usize + 2];
        num[0] = 1;
        num[2 * m as usize + 1] = 1;
        assert_eq!(dims(&s, 10), closed(&num, &[1, 2], 11));
        let f = freeness_numerator(&HilbertSeries::new(dims(&s, 10)), 2, 10);
        assert!(!f.negative);
        assert_eq!(&f.numerator[..num.len()], &num[..]);
    }
}

#[test]
fn lowest_twisted_generator_in_degree_one() {
    for a in [r(1, 3), r(5, 2), r(-2, 7)] {
        let s = QuasiSpec::twisted(1, vec![a.clone(), r(0, 1)]);
        let b: Vec<P> = degree_basis(&s, 1).unwrap();
        assert_eq!(b.len(), 1);
        let one = Rational::one();
        let ours = &P::var(2, 0).scale(&(&one - &a)) + &P::var(2, 1).scale(&(&one + &a));
        assert!(proportional(&b[0], &ours), "a = {a}: {}", b[0]);
        // (a − 1)X₁ + (a + 1)X₂ has the wrong sign on X₁: its u¹ coefficient is 2(a² − 1)
        let flipped = &P::var(2, 0).scale(&(&a - &one)) + &P::var(2, 1).scale(&(&a + &one));
        assert!(!satisfies(&s, &flipped).unwrap());
        // the swapped twist (0, a) swaps the coefficients
        let s = QuasiSpec::twisted(1, vec![r(0, 1), a.clone()]);
        let b: Vec<P> = degree_basis(&s, 1).unwrap();
        let other = &P::var(2, 0).scale(&(&one + &a)) + &P::var(2, 1).scale(&(&one - &a));
        assert!(proportional(&b[0], &other));
    }
}

#[test]
fn three_variable_counterexample() {
    let s = QuasiSpec::twisted(2, vec![r(1, 1), r(0, 1), r(0, 1)]);
    let d = dims(&s, 12);
    assert_eq!(&d[..2], &[0, 0]);
    assert_eq!(&d[2..], &[1, 1, 2, 3, 5, 7, 10, 15, 20, 26, 33]);
    let f = freeness_numerator(&HilbertSeries::new(d), 3, 12);
    assert_eq!(f.numerator, vec![0, 0, 1, 0, 0, 0, 1, 1, 0, 2, 1, 0, -1]);
    assert!(f.negative);
    let j = series_json(&HilbertSeries::new(dims(&s, 12)), 3);
    assert_eq!(j["free_flag"], false);
}

#[test]
fn freeness_numerator_is_formal() {
    for m in 0..4usize {
        let mut num = vec![0; m + 1];
        num[m] = 1;
        let s = HilbertSeries::rational(&num, &[1, 1], 12);
        let f = freeness_numerator(&s, 2, 11);
        assert!(!f.negative);
        let mut expect = vec![0i64; 12];
        expect[m] = 1;
        if m + 1 < 12 {
            expect[m + 1] = 1;
        }
        assert_eq!(f.numerator, expect);
    }
    // truncation clamps to the available terms
    assert_eq!(freeness_numerator(&HilbertSeries::new(vec![1, 1]), 2, 10).numerator, vec![1, 0]);
}

#[test]
fn expected_series_examples() {
    for m in 0..=2u32 {
        let mu = m as usize;
        let len = 11;
        let one = vec![1usize];
        let e = expected_twisted_series(&[1, 1], m, &[one.clone(), one.clone()], len).unwrap();
        let mut num = vec![0; mu + 1];
        num[mu] = 1;
        assert_eq!(e.coeffs, closed(&num, &[1, 1], len));
        let e = expected_twisted_series(&[1, 1, 1], m, &[one.clone(), one.clone(), one.clone()], len).unwrap();
        let mut num = vec![0; 3 * mu + 1];
        num[3 * mu] = 1;
        assert_eq!(e.coeffs, closed(&num, &[1, 1, 1], len));
        let hp = expected_twisted_series(&[1, 2], m, &[one.clone(), vec![2]], len).unwrap();
        let hm = expected_twisted_series(&[1, 2], m, &[one.clone(), vec![1, 1]], len).unwrap();
        let mut num = vec![0; 4 * mu + 2];
        num[2 * mu] = 1;
        assert_eq!(hp.coeffs, closed(&num[..2 * mu + 1], &[1, 1, 2], len));
        num[2 * mu] = 0;
        num[4 * mu + 1] = 1;
        assert_eq!(hm.coeffs, closed(&num, &[1, 1, 2], len));
    }
    assert!(expected_twisted_series(&[2], 1, &[vec![1]], 5).is_err());
}

#[test]
fn twisted_series_match_expected_for_generic_twists() {
    let len = 9;
    let cases: Vec<(Vec<usize>, Vec<Rational>)> = vec![
        (vec![1, 1], vec![r(1, 3), r(0, 1)]),
        (vec![1, 1, 1], vec![r(1, 3), r(3, 4), r(0, 1)]),
        (vec![1, 2], vec![r(2, 5), r(0, 1), r(0, 1)]),
    ];
    for m in 1..=2u32 {
        for (parts, a) in &cases {
            let s = QuasiSpec::twisted(m, a.clone());
            assert!(s.generic_twists());
            let got = dims(&s, len - 1);
            let want = expected_total_series(parts, m, len).unwrap().coeffs;
            assert_eq!(got, want, "m = {m}, parts {parts:?}");
            assert!(!freeness_numerator(&HilbertSeries::new(got), s.n, len - 1).negative);
        }
        let a = vec![r(2, 5), r(0, 1), r(0, 1)];
        let plus = dims(&QuasiSpec::twisted(m, a.clone()).with_parity(1, 2, 1), len - 1);
        let minus = dims(&QuasiSpec::twisted(m, a).with_parity(1, 2, -1), len - 1);
        assert_eq!(plus, expected_twisted_series(&[1, 2], m, &[vec![1], vec![2]], len).unwrap().coeffs);
        assert_eq!(minus, expected_twisted_series(&[1, 2], m, &[vec![1], vec![1, 1]], len).unwrap().coeffs);
    }
}

#[test]
fn kostka_examples_and_molien_oracle() {
    assert_eq!(kostka(&[3]), vec![1]);
    assert_eq!(kostka(&[1, 1]), vec![0, 1]);
    assert_eq!(kostka(&[2, 1]), vec![0, 1, 1]);
    assert_eq!(kostka(&[1, 1, 1]), vec![0, 0, 0, 1]);
    for n in 1..=6 {
        let mut total = 0;
        for p in partitions_of(n) {
            let k = kostka(&p);
            assert_eq!(k.iter().sum::<i64>(), dimension(&p) as i64);
            assert_eq!(molien_kostka(&p, 30).unwrap(), k, "{p:?}");
            total += dimension(&p).pow(2);
        }
        assert_eq!(total, (1..=n).product::<usize>());
    }
    assert_eq!(content(&[2, 1]), 0);
    assert_eq!(content(&[3]), 3);
    assert_eq!(conjugate(&[3, 1]), vec![2, 1, 1]);
    assert_eq!(character(&[2, 1], &[1, 1, 1]), 2);
    assert_eq!(character(&[2, 1], &[3]), -1);
    assert_eq!(character(&[1, 1, 1], &[2, 1]), -1);
    assert_eq!(charge(&[2, 1, 3]), 1);
}

#[test]
fn flatness_protocols() {
    let seeds = [1, 2, 3];
    for n in 2..=3 {
        for m in 1..=2 {
            let rep = flatness_plain(n, m, 8, &seeds).unwrap();
            assert!(rep.pass(), "{}", rep.to_json());
            assert!(rep.samples.iter().all(|(_, q, _)| !q.is_one()));
        }
    }
    for m in 0..=1 {
        for m1 in 0..=1 {
            let rep = flatness_cyclotomic(2, m, vec![m1], 8, &seeds).unwrap();
            assert!(rep.pass(), "{}", rep.to_json());
        }
    }
    let rep = flatness_twisted_q(1, vec![r(1, 3), r(0, 1)], 8, &seeds).unwrap();
    assert!(rep.pass(), "{}", rep.to_json());
    let rep = flatness_twisted_q(2, vec![r(1, 2), r(0, 1)], 8, &seeds).unwrap();
    assert!(rep.pass(), "{}", rep.to_json());
}

#[test]
fn cyclotomic_over_higher_roots_of_unity() {
    // l = 3 needs Q(ζ₃); flatness against 𝐪 = 1 at degree ≤ 6
    let classical = QuasiSpec::cyclotomic(2, 1, vec![0, 1], Rational::one());
    let deformed = QuasiSpec::cyclotomic(2, 1, vec![0, 1], r(5, 3));
    let a = graded_basis::<Cyclo>(&classical, 6).unwrap().dims();
    let b = graded_basis::<Cyclo>(&deformed, 6).unwrap().dims();
    assert_eq!(a, b);
    assert!(graded_basis::<Rational>(&deformed, 2).is_err());
}

#[test]
fn projector_conditions() {
    // m = 0, m_1 = 1, l = 2: odd parts in x_i must be divisible by x_i^3
    let s = QuasiSpec::cyclotomic(1, 0, vec![1], Rational::one());
    assert_eq!(dims(&s, 6), vec![1, 0, 1, 1, 1, 1, 1]);
    assert!(!satisfies(&s, &mono(&[1])).unwrap());
    assert!(satisfies(&s, &mono(&[3])).unwrap());
}

#[test]
fn ideal_is_contained() {
    for (n, m) in [(2, 1), (2, 2), (3, 1)] {
        for q in [r(3, 2), Rational::one()] {
            let s = QuasiSpec::plain_q(n, m, q);
            assert!(ideal_contained(&s, 2).unwrap().is_some());
        }
    }
}

#[test]
fn macdonald_operator_preserves_q_quasiinvariants() {
    for (n, m) in [(2, 1), (2, 2), (3, 1)] {
        let s = QuasiSpec::plain_q(n, m, r(3, 2));
        let b = graded_basis::<Rational>(&s, 6).unwrap();
        let checked = macdonald_preserves(&b, 6).unwrap().expect("preserved");
        assert_eq!(checked, b.dims().iter().sum::<usize>());
    }
    // at a t that is not q^{−m} the image leaves the space
    let s = QuasiSpec::plain_q(2, 1, r(3, 2));
    let b = graded_basis::<Rational>(&s, 3).unwrap();
    let hit = b.degrees[3]
        .iter()
        .filter_map(|f| cyclodaha_macdonald::macdonald_m1_any_at(&r(3, 2), &r(7, 5), f).ok())
        .any(|g| !satisfies(&s, &g).unwrap());
    assert!(hit);
}

#[test]
fn degenerate_parameters_are_rejected() {
    assert!(matches!(QuasiSpec::plain_q(2, 1, r(-1, 1)).validate(), Err(QuasiError::ParameterDegenerate(_))));
    assert!(matches!(QuasiSpec::plain_q(2, 1, r(0, 1)).validate(), Err(QuasiError::ParameterDegenerate(_))));
    assert!(QuasiSpec::twisted_q(1, vec![r(1, 2), r(0, 1)], r(-2, 1)).validate().is_err());
    assert!(QuasiSpec::twisted(1, vec![r(1, 1)]).with_parity(0, 0, 1).validate().is_err());
    assert!(!QuasiSpec::twisted(1, vec![r(1, 1), r(0, 1), r(0, 1)]).generic_twists());
    assert_eq!("twisted-q".parse::<Variant>().unwrap(), Variant::TwistedQ);
}

#[test]
fn basis_elements_are_rechecked_independently() {
    let s = QuasiSpec::twisted_q(1, vec![r(1, 3), r(0, 1), r(0, 1)], r(4, 3));
    let b = graded_basis::<Rational>(&s, 5).unwrap();
    for (d, elems) in b.degrees.iter().enumerate() {
        for f in elems {
            assert!(satisfies(&s, f).unwrap());
            assert!(f.is_homogeneous());
            assert!(f.terms().all(|(e, _)| e.degree() == d as i64));
        }
    }
}
