use cyclodaha_algebra::words::*;
use cyclodaha_algebra::*;
use cyclodaha_core::{LaurentPoly, Rational};
use cyclodaha_ops::expr::build::*;
use cyclodaha_ops::{parse_expr, Gen, OperatorExpr, Param, Rep};

const RANDOM: VerifyMode = VerifyMode::Random { trials: 30, seed: 17, window: 3 };

fn assert_family(id: CatalogId, n: usize, l: usize, seed: u64, mode: VerifyMode) {
    let rep = generic_rep(id, n, l, seed).unwrap();
    let cat = catalog(id, n, l).unwrap();
    let report = verify_family(&rep, &cat, mode).unwrap();
    let bad: Vec<_> = report.failures().map(|r| r.relation.clone()).collect();
    assert!(bad.is_empty(), "{id} N={n} l={l} seed={seed}: {bad:?}");
}

fn count(id: CatalogId, n: usize, schema: &str) -> usize {
    catalog(id, n, 1).unwrap().relations.iter().filter(|r| r.schema == schema).count()
}

#[test]
fn schema_counts() {
    assert_eq!(schema_labels(CatalogId::Daha).len(), 12);
    assert_eq!(schema_labels(CatalogId::DegCyc).len(), 11);
    let cyc = schema_labels(CatalogId::CycDaha);
    assert_eq!(cyc.iter().filter(|s| s.starts_with('R')).count(), 9);
    assert_eq!(cyc.iter().filter(|s| s.starts_with("cd")).count(), 10);
    assert_eq!(catalog(CatalogId::Daha, 4, 1).unwrap().schemas().len(), 12);
    let last = catalog(CatalogId::Lastrel, 3, 1).unwrap();
    assert_eq!(last.relations.len(), 1);
    assert_eq!(last.relations[0].lhs, parse_expr("D1^(l) X1 + 1").unwrap());
    assert_eq!(last.relations[0].rhs, parse_expr("q T1 T2 T2 T1 (X1 D1^(l) + 1)").unwrap());
    let cat = catalog(CatalogId::DegDaha, 3, 1).unwrap();
    let piy = cat.relations.iter().find(|r| r.schema == "pi y_N").unwrap();
    assert_eq!(piy.rhs, parse_expr("(y1 - hbar) pi").unwrap());
    assert!("nope".parse::<CatalogId>().is_err());
}

#[test]
fn index_expansion_matches_hand_counts_at_rank_three() {
    // DAHA: R1 2, R2 1, R3 0, R4 2, R5 2, R6 2, R7 2, R8 1, R9 3, R10 3, R11 3, R12 3.
    let expect = [2, 1, 0, 2, 2, 2, 2, 1, 3, 3, 3, 3];
    for (k, e) in expect.iter().enumerate() {
        assert_eq!(count(CatalogId::Daha, 3, &format!("R{}", k + 1)), *e, "R{}", k + 1);
    }
    assert_eq!(catalog(CatalogId::Daha, 3, 1).unwrap().relations.len(), 24);
    // deg-daha at N = 3: s_i² for i = 0,1,2; a braid per cyclic neighbour pair;
    // no far-commuting pairs; one [s,y] instance per affine reflection.
    assert_eq!(count(CatalogId::DegDaha, 3, "s^2"), 3);
    assert_eq!(count(CatalogId::DegDaha, 3, "braid"), 3);
    assert_eq!(count(CatalogId::DegDaha, 3, "far"), 0);
    assert_eq!(count(CatalogId::DegDaha, 3, "[s,y]"), 3);
    assert_eq!(count(CatalogId::DegDaha, 4, "far"), 2);
    assert_eq!(count(CatalogId::DegDaha, 2, "braid"), 0);
    assert_eq!(count(CatalogId::DegDaha, 3, "[y,X] i>j"), 3);
    // three transpositions acting on three indices
    assert_eq!(count(CatalogId::DegCyc, 3, "s X"), 9);
    assert_eq!(count(CatalogId::DegCyc, 3, "[D1,Xm]"), 2);
    assert_eq!(count(CatalogId::DegCyc, 3, "conj [D,X]"), 2 * 3);
    assert_eq!(count(CatalogId::CycDaha, 3, "cd5"), 3);
    assert_eq!(count(CatalogId::L1, 3, "X D i<j"), 3);
}

#[test]
fn daha_relations_hold_on_box() {
    for n in 2..=3 {
        for seed in [1, 2, 3] {
            assert_family(CatalogId::Daha, n, 0, seed, VerifyMode::Box { radius: Some(2) });
        }
    }
}

#[test]
fn degenerate_relations_hold_on_box() {
    for n in 2..=3 {
        for seed in [1, 2, 3] {
            assert_family(CatalogId::DegDaha, n, 1, seed, VerifyMode::Box { radius: Some(2) });
            for l in 1..=2 {
                assert_family(CatalogId::DegCyc, n, l, seed, VerifyMode::Box { radius: Some(2) });
            }
        }
    }
}

#[test]
fn cyclotomic_relations_hold_randomized() {
    for n in 2..=3 {
        for l in 1..=2 {
            assert_family(CatalogId::CycDaha, n, l, 4, RANDOM);
        }
        assert_family(CatalogId::L1, n, 1, 4, RANDOM);
        assert_family(CatalogId::Lastrel, n, 1, 4, RANDOM);
    }
}

fn holds(id: CatalogId, n: usize, l: usize, a: &str, b: &str) -> bool {
    let rep = generic_rep(id, n, l, 9).unwrap();
    check_pair(&rep, &parse_expr(a).unwrap(), &parse_expr(b).unwrap(), RANDOM).unwrap().result
}

#[test]
fn uncorrected_relations_fail() {
    // cd2 with the uninverted word, against the inverted conjugating word
    assert!(!holds(CatalogId::CycDaha, 2, 1, "Y1 X2", "T1 T1 X2 Y1"));
    assert!(holds(CatalogId::CycDaha, 2, 1, "Y1 X2", "T1^-1 T1^-1 X2 Y1"));
    assert!(!holds(CatalogId::CycDaha, 3, 1, "Y1 X3", "T2^-1 T1 T1 T2 X3 Y1"));
    // cd8 without the factor q
    assert!(!holds(CatalogId::CycDaha, 2, 2, "D1^(l) Y1", "T1 T1 Y1 D1^(l)"));
    assert!(holds(CatalogId::CycDaha, 2, 2, "D1^(l) Y1", "q T1 T1 Y1 D1^(l)"));
    // "i − j ≠ ±1" read literally includes j = i
    assert!(!holds(CatalogId::DegDaha, 2, 1, "s1 y1", "y1 s1"));
}

#[test]
fn jucys_murphy_expansions() {
    for n in 2..=4usize {
        let rep = generic_rep(CatalogId::Daha, n, 0, 3).unwrap();
        let d = c(cyclodaha_ops::Coef::tt_minus_inv());
        let mut outer = OperatorExpr::one();
        let mut inner = OperatorExpr::one();
        for i in 2..=n {
            // T_1…T_{i−1}…T_1 and T_{i−1}…T_1…T_{i−1}
            let mut a = t_run(1, i - 1, false);
            a.extend(t_run(i - 2, 1, false));
            outer = outer.add(&d.compose(&w(&a)));
            inner = inner.add(&d.compose(&palindrome(1, i, false)));
        }
        let j = jucys_murphy(n);
        assert!(check_pair(&rep, &j, &outer, RANDOM).unwrap().result, "N={n}");
        assert!(check_pair(&rep, &j, &inner, RANDOM).unwrap().result, "N={n}");
    }
}

#[test]
fn affine_hecke_generator_t0() {
    for n in 2..=3 {
        let rep = generic_rep(CatalogId::Daha, n, 0, 5).unwrap();
        let t0 = t0(n);
        let quad = t0.sub(&p(Param::Tt)).compose(&t0.add(&c(cyclodaha_ops::Coef::param_pow(Param::Tt, -1))));
        assert!(check_pair(&rep, &quad, &OperatorExpr::zero(), RANDOM).unwrap().result);
        if n == 3 {
            let t1 = g(Gen::T(1));
            let br = check_pair(&rep, &prod(&[t0.clone(), t1.clone(), t0.clone()]), &prod(&[t1.clone(), t0, t1]), RANDOM);
            assert!(br.unwrap().result);
        }
        let x1t1y1 = parse_expr("X1 T1 Y1").unwrap();
        let rhs = parse_expr("T1 Y1 T1 X1 T1").unwrap();
        assert!(check_pair(&rep, &x1t1y1, &rhs, RANDOM).unwrap().result);
    }
}

#[test]
fn family_mismatch_is_reported() {
    let rep = generic_rep(CatalogId::Daha, 2, 0, 1).unwrap();
    let cat = catalog(CatalogId::DegDaha, 2, 1).unwrap();
    assert!(matches!(verify_family(&rep, &cat, RANDOM), Err(AlgebraError::WrongFamily { .. })));
}

#[test]
fn report_json_shape() {
    let rep = generic_rep(CatalogId::Daha, 2, 0, 1).unwrap();
    let mut cat = catalog(CatalogId::Daha, 2, 0).unwrap();
    cat.relations.push(Relation {
        schema: "bogus".into(),
        name: "Y2 X1 = X1 Y2".into(),
        lhs: parse_expr("Y2 X1").unwrap(),
        rhs: parse_expr("X1 Y2").unwrap(),
    });
    let report = verify_family(&rep, &cat, VerifyMode::Box { radius: Some(2) }).unwrap();
    let json = report.to_json();
    let arr = json.as_array().unwrap();
    assert_eq!(arr.len(), cat.relations.len());
    assert_eq!(arr[0]["status"], "pass");
    let last = arr.last().unwrap();
    assert_eq!(last["status"], "fail");
    assert!(last["witness"]["monomial"].is_array());
    assert!(last["params"]["q"].is_string());
}

#[test]
fn involution_images() {
    let x1 = g(Gen::X(1));
    assert_eq!(involution_image(Involution::CycDaha, &x1, 2).unwrap(), g(Gen::Dl(1)));
    let t1 = g(Gen::T(1));
    let twice =
        involution_image(Involution::CycDaha, &involution_image(Involution::CycDaha, &t1, 2).unwrap(), 2).unwrap();
    assert_eq!(twice, t1);
    assert_eq!(involution_image(Involution::Cherednik, &g(Gen::Y(1)), 2).unwrap(), g(Gen::Xinv(1)));
    let err = involution_image(Involution::L1, &g(Gen::Y(1)), 2).unwrap_err();
    assert!(matches!(err, AlgebraError::NotInDomain { .. }));
    // coefficients change with the parameters
    let e = p(Param::Q).compose(&x1);
    let img = involution_image(Involution::CycDaha, &e, 2).unwrap();
    assert_eq!(img, c(cyclodaha_ops::Coef::param_pow(Param::Q, -1)).compose(&g(Gen::Dl(1))));
}

#[test]
fn involutions_preserve_relations() {
    for n in 2..=3 {
        let cases = [(CatalogId::CycDaha, 2), (CatalogId::L1, 1), (CatalogId::Lastrel, 1), (CatalogId::DegCyc, 1), (CatalogId::DegCyc, 2), (CatalogId::Daha, 0)];
        for (id, l) in cases {
            let rep = generic_rep(id, n, l, 6).unwrap();
            let report = verify_involution(&rep, id, RANDOM).unwrap();
            let bad: Vec<_> = report
                .relations
                .failures()
                .chain(report.square.iter().filter(|r| !r.pass))
                .map(|r| r.relation.clone())
                .collect();
            assert!(bad.is_empty(), "{id} N={n}: {bad:?}");
        }
    }
}

#[test]
fn literal_degenerate_involution_breaks_a_relation() {
    // φ(y_2) = y_2 + ħ − k s_12 on the image of s_1 y_1 = y_2 s_1 + k
    let rep = generic_rep(CatalogId::DegCyc, 2, 1, 2).unwrap();
    let lhs = parse_expr("s1 (y1 + hbar - k s1)").unwrap();
    let rhs = parse_expr("(y2 + hbar - k s1) s1 - k").unwrap();
    assert!(!check_pair(&rep, &lhs, &rhs, RANDOM).unwrap().result);
    let rhs = parse_expr("(y2 + hbar + k s1) s1 - k").unwrap();
    assert!(check_pair(&rep, &lhs, &rhs, RANDOM).unwrap().result);
}

#[test]
fn basis_enumeration_examples() {
    let b = basis_monomials(BasisShape::MxMdMissing, 1, 1, DegreeCaps::uniform(2));
    let labels: Vec<i32> = b.iter().map(|e| e.label[0]).collect();
    assert_eq!(labels, vec![-2, -1, 0, 1, 2]);
    assert_eq!(b[0].expr, w(&[Gen::Dl(1), Gen::Dl(1)]));
    assert_eq!(b[4].expr, w(&[Gen::X(1), Gen::X(1)]));

    let b = basis_monomials(BasisShape::MxMySMd, 2, 1, DegreeCaps::uniform(0));
    let exprs: Vec<_> = b.iter().map(|e| e.expr.clone()).collect();
    assert_eq!(exprs, vec![OperatorExpr::one(), g(Gen::S(1))]);

    // N = 1, l = 2, caps (1, 1, ·, 1): two choices each for X, Y and D
    let b = basis_monomials(BasisShape::MxMyTsMd, 1, 2, DegreeCaps { x: 1, y: 1, d: 1 });
    assert_eq!(b.len(), 8);
    // y-exponents never exceed l − 1
    let b = basis_monomials(BasisShape::MxMySMd, 2, 2, DegreeCaps::uniform(3));
    assert!(b.iter().all(|e| e.label[2..4].iter().all(|&v| v <= 1)));
    assert_eq!(b.len(), 16 * 4 * 2 * 16);
    assert_eq!(cyclodaha_algebra::basis::permutations_with_reduced_words(3).iter().map(|p| p.1.len()).sum::<usize>(), 9);
}

#[test]
fn independence_examples() {
    let r = |a, b| Rational::new(a, b);
    let rep = Rep::deg(1, r(1, 1), r(2, 7), vec![r(3, 5)]).pin(Param::Hbar, r(1, 1));
    let probes: Vec<LaurentPoly<Rational>> = vec![LaurentPoly::one(1), LaurentPoly::var(1, 0), LaurentPoly::var(1, 0).pow(2)];
    let ops = vec![OperatorExpr::one(), g(Gen::X(1)), g(Gen::Dl(1))];
    let rank = independence_check(&rep, &ops, &probes).unwrap();
    assert_eq!(rank.rank, 3);
    assert!(rank.full_rank());
    let dup = vec![g(Gen::X(1)), g(Gen::X(1)), g(Gen::Dl(1))];
    let rank = independence_check(&rep, &dup, &probes).unwrap();
    assert_eq!(rank.rank, 2);

    let rep = generic_rep(CatalogId::DegCyc, 2, 1, 8).unwrap();
    let ops: Vec<OperatorExpr> =
        basis_monomials(BasisShape::MxMySMd, 2, 1, DegreeCaps { x: 1, y: 0, d: 1 }).into_iter().map(|e| e.expr).collect();
    let probes = cyclodaha_algebra::basis::probe_monomials::<Rational>(2, 4);
    let rank = independence_check(&rep, &ops, &probes).unwrap();
    assert_eq!(rank.operators, 2 * 4 * 4);
    assert!(rank.full_rank(), "{rank:?}");

    let rep = generic_rep(CatalogId::CycDaha, 2, 2, 8).unwrap();
    let ops: Vec<OperatorExpr> =
        basis_monomials(BasisShape::MxMyTsMd, 2, 2, DegreeCaps { x: 1, y: 1, d: 1 }).into_iter().map(|e| e.expr).collect();
    let probes: Vec<LaurentPoly<Rational>> =
        cyclodaha_core::laurent::box_monomials(2, 2).into_iter().map(LaurentPoly::monomial).collect();
    let rank = independence_check(&rep, &ops, &probes).unwrap();
    assert!(rank.full_rank(), "{rank:?}");
}

#[test]
fn degenerate_basis_is_independent_in_other_orders() {
    use cyclodaha_algebra::basis::{Block::*, STANDARD_ORDER};
    let orders = [STANDARD_ORDER, [D, Group, Y, X], [Y, X, D, Group], [Group, D, X, Y]];
    let rep = generic_rep(CatalogId::DegCyc, 2, 2, 3).unwrap();
    let probes: Vec<LaurentPoly<Rational>> =
        cyclodaha_core::laurent::box_monomials(2, 2).into_iter().map(LaurentPoly::monomial).collect();
    for order in orders {
        let ops: Vec<OperatorExpr> = basis_monomials_ordered(BasisShape::MxMySMd, 2, 2, DegreeCaps { x: 1, y: 1, d: 1 }, order)
            .into_iter()
            .map(|e| e.expr)
            .collect();
        let rank = independence_check(&rep, &ops, &probes).unwrap();
        assert!(rank.full_rank(), "{order:?}: {rank:?}");
    }
}
