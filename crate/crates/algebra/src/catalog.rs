//! Relation catalogs, expanded to explicit instances for a given rank and level.

use std::fmt;
use std::str::FromStr;

use cyclodaha_ops::expr::build::*;
use cyclodaha_ops::{Coef, Family, Gen, OperatorExpr, Param};

use crate::error::AlgebraError;
use crate::words::*;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CatalogId {
    Daha,
    DegDaha,
    DegCyc,
    CycDaha,
    L1,
    Lastrel,
}

impl CatalogId {
    pub const ALL: [CatalogId; 6] =
        [CatalogId::Daha, CatalogId::DegDaha, CatalogId::DegCyc, CatalogId::CycDaha, CatalogId::L1, CatalogId::Lastrel];

    pub fn name(self) -> &'static str {
        match self {
            CatalogId::Daha => "daha",
            CatalogId::DegDaha => "deg-daha",
            CatalogId::DegCyc => "deg-cyc",
            CatalogId::CycDaha => "cyc-daha",
            CatalogId::L1 => "l1",
            CatalogId::Lastrel => "lastrel",
        }
    }

    /// The representation family the relations are evaluated in.
    pub fn family(self) -> Family {
        match self {
            CatalogId::DegDaha | CatalogId::DegCyc => Family::DegDaha,
            _ => Family::Daha,
        }
    }

    /// `l1` and `lastrel` are stated for `D_i = X_1⁻¹(Y_1 − 1)` conjugates, i.e. `l = 1`, `Z_1 = 1`.
    pub fn needs_unit_z1(self) -> bool {
        matches!(self, CatalogId::L1 | CatalogId::Lastrel)
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatalogId {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CatalogId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| AlgebraError::UnknownFamily(s.to_string()))
    }
}

/// One instance of a relation schema: `lhs = rhs`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub schema: String,
    pub name: String,
    pub lhs: OperatorExpr,
    pub rhs: OperatorExpr,
}

#[derive(Clone, Debug)]
pub struct RelationCatalog {
    pub id: CatalogId,
    pub n: usize,
    pub l: usize,
    pub relations: Vec<Relation>,
}

impl RelationCatalog {
    /// Distinct schema names in catalog order.
    pub fn schemas(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for r in &self.relations {
            if !out.contains(&r.schema.as_str()) {
                out.push(&r.schema);
            }
        }
        out
    }
}

struct Builder {
    rels: Vec<Relation>,
}

impl Builder {
    fn add(&mut self, schema: &str, name: String, lhs: OperatorExpr, rhs: OperatorExpr) {
        self.rels.push(Relation { schema: schema.to_string(), name, lhs, rhs });
    }
}

fn t(i: usize) -> OperatorExpr {
    g(Gen::T(i))
}
fn ti(i: usize) -> OperatorExpr {
    g(Gen::Tinv(i))
}
fn x(i: usize) -> OperatorExpr {
    g(Gen::X(i))
}
fn y(i: usize) -> OperatorExpr {
    g(Gen::Y(i))
}
fn yl(i: usize) -> OperatorExpr {
    g(Gen::Ylow(i))
}
fn dl(i: usize) -> OperatorExpr {
    g(Gen::Dl(i))
}
fn s(i: usize) -> OperatorExpr {
    g(Gen::S(i))
}
fn sij(i: usize, j: usize) -> OperatorExpr {
    g(Gen::Sij(i, j))
}
fn tt() -> OperatorExpr {
    p(Param::Tt)
}
fn tt_diff() -> OperatorExpr {
    c(Coef::tt_minus_inv())
}
fn zero() -> OperatorExpr {
    OperatorExpr::zero()
}
fn one() -> OperatorExpr {
    OperatorExpr::one()
}

/// Relations R1–R12 as instances, restricted to the listed schema numbers.
fn daha_relations(b: &mut Builder, n: usize, which: &[u8]) {
    let has = |k: u8| which.contains(&k);
    for i in 1..n {
        if has(1) {
            let lhs = t(i).sub(&tt()).compose(&t(i).add(&c(Coef::param_pow(Param::Tt, -1))));
            b.add("R1", format!("R1[i={i}]"), lhs, zero());
        }
        if has(2) && i + 1 < n {
            b.add("R2", format!("R2[i={i}]"), prod(&[t(i), t(i + 1), t(i)]), prod(&[t(i + 1), t(i), t(i + 1)]));
        }
        if has(3) {
            for j in i + 2..n {
                b.add("R3", format!("R3[i={i},j={j}]"), t(i).compose(&t(j)), t(j).compose(&t(i)));
            }
        }
        if has(4) {
            b.add("R4", format!("R4[i={i}]"), prod(&[t(i), x(i), t(i)]), x(i + 1));
        }
        if has(5) {
            for j in (1..=n).filter(|&j| j != i && j != i + 1) {
                b.add("R5", format!("R5[i={i},j={j}]"), t(i).compose(&x(j)), x(j).compose(&t(i)));
            }
        }
        if has(6) {
            b.add("R6", format!("R6[i={i}]"), prod(&[t(i), y(i), t(i)]), y(i + 1));
        }
        if has(7) {
            for j in (1..=n).filter(|&j| j != i && j != i + 1) {
                b.add("R7", format!("R7[i={i},j={j}]"), t(i).compose(&y(j)), y(j).compose(&t(i)));
            }
        }
    }
    if has(8) && n >= 2 {
        let lhs = w(&[Gen::Xinv(1), Gen::Yinv(2), Gen::X(1), Gen::Y(2)]);
        b.add("R8", "R8".into(), lhs, t(1).compose(&t(1)));
    }
    let xt = prod(&(1..=n).map(x).collect::<Vec<_>>());
    let yt = prod(&(1..=n).map(y).collect::<Vec<_>>());
    for i in 1..=n {
        if has(9) {
            b.add("R9", format!("R9[i={i}]"), y(i).compose(&xt), p(Param::Q).compose(&xt).compose(&y(i)));
        }
        if has(10) {
            let rhs = c(Coef::param_pow(Param::Q, -1)).compose(&yt).compose(&x(i));
            b.add("R10", format!("R10[i={i}]"), x(i).compose(&yt), rhs);
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            if has(11) {
                b.add("R11", format!("R11[i={i},j={j}]"), x(i).commutator(&x(j)), zero());
            }
            if has(12) {
                b.add("R12", format!("R12[i={i},j={j}]"), y(i).commutator(&y(j)), zero());
            }
        }
    }
}

fn deg_daha(b: &mut Builder, n: usize) {
    let hb = || p(Param::Hbar);
    let k = || p(Param::K);
    let sa = |i: usize| s_aff(i, n);
    let idx = |i: usize| (i % n) + 0;
    for i in 0..n {
        b.add("s^2", format!("s^2[i={i}]"), sa(i).compose(&sa(i)), one());
    }
    // Braid and commutation among s_0..s_{N−1} modulo N. For N = 2 the pair
    // (s_0, s_1) generates the infinite dihedral group and carries neither.
    if n >= 3 {
        for i in 0..n {
            let j = idx(i + 1);
            b.add(
                "braid",
                format!("braid[i={i}]"),
                prod(&[sa(i), sa(j), sa(i)]),
                prod(&[sa(j), sa(i), sa(j)]),
            );
        }
        for i in 0..n {
            for j in i + 1..n {
                let d = (j - i) % n;
                if d != 1 && d != n - 1 {
                    b.add("far", format!("far[i={i},j={j}]"), sa(i).compose(&sa(j)), sa(j).compose(&sa(i)));
                }
            }
        }
    }
    for i in 0..n {
        let lhs = g(Gen::Pi).compose(&sa(i));
        let rhs = sa(idx(i + 1)).compose(&g(Gen::Pi));
        b.add("pi s", format!("pi s[i={i}]"), lhs, rhs);
    }
    for i in 1..=n {
        for j in i + 1..=n {
            b.add("[y,y]", format!("[y,y][i={i},j={j}]"), yl(i).commutator(&yl(j)), zero());
        }
    }
    for i in 1..n {
        b.add("pi y", format!("pi y[i={i}]"), g(Gen::Pi).compose(&yl(i)), yl(i + 1).compose(&g(Gen::Pi)));
    }
    b.add("pi y_N", "pi y_N".into(), g(Gen::Pi).compose(&yl(n)), yl(1).sub(&hb()).compose(&g(Gen::Pi)));
    for i in 1..n {
        b.add("s y", format!("s y[i={i}]"), s(i).compose(&yl(i)), yl(i + 1).compose(&s(i)).add(&k()));
    }
    b.add("s_0 y_N", "s_0 y_N".into(), s0(n).compose(&yl(n)), yl(1).sub(&hb()).compose(&s0(n)).add(&k()));
    // [s_i, y_j] = 0 for j ∉ {i, i+1} mod N (s_0 moves y_N and y_1)
    for i in 0..n {
        let moved = if i == 0 { [n, 1] } else { [i, i + 1] };
        for j in (1..=n).filter(|j| !moved.contains(j)) {
            b.add("[s,y]", format!("[s,y][i={i},j={j}]"), sa(i).commutator(&yl(j)), zero());
        }
    }
    // [y_i, X_j] by the sign of i - j
    for i in 1..=n {
        for j in 1..=n {
            let lhs = yl(i).commutator(&x(j));
            if i > j {
                b.add("[y,X] i>j", format!("[y,X][i={i},j={j}]"), lhs, k().compose(&x(j)).compose(&sij(i, j)));
            } else if i < j {
                b.add("[y,X] i<j", format!("[y,X][i={i},j={j}]"), lhs, k().compose(&x(i)).compose(&sij(i, j)));
            } else {
                let mut rhs = hb().compose(&x(i));
                for r in 1..=n {
                    if r < i {
                        rhs = rhs.sub(&k().compose(&x(r)).compose(&sij(i, r)));
                    } else if r > i {
                        rhs = rhs.sub(&k().compose(&x(i)).compose(&sij(i, r)));
                    }
                }
                b.add("[y,X] i=j", format!("[y,X][i={i}]"), lhs, rhs);
            }
        }
    }
    for i in 1..n {
        for j in 1..=n {
            let sj = if j == i {
                i + 1
            } else if j == i + 1 {
                i
            } else {
                j
            };
            b.add("s X", format!("s X[i={i},j={j}]"), s(i).compose(&x(j)), x(sj).compose(&s(i)));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            b.add("[X,X]", format!("[X,X][i={i},j={j}]"), x(i).commutator(&x(j)), zero());
        }
    }
    // Remark trigDAHA1 replacements
    let xt = prod(&(1..=n).map(x).collect::<Vec<_>>());
    let ys = sum(&(1..=n).map(yl).collect::<Vec<_>>());
    for i in 1..=n {
        b.add("[y,prod X]", format!("[y,prod X][i={i}]"), yl(i).commutator(&xt), hb().compose(&xt));
    }
    for j in 1..=n {
        b.add("[sum y,X]", format!("[sum y,X][j={j}]"), ys.commutator(&x(j)), hb().compose(&x(j)));
    }
    if n >= 2 {
        b.add("[y2,X1]", "[y2,X1]".into(), yl(2).commutator(&x(1)), k().compose(&x(1)).compose(&s(1)));
    }
    // transition formulas between the two presentations
    let mut pw = vec![Gen::X(1)];
    pw.extend((1..n).map(Gen::S));
    b.add("transition pi", "pi = X1 s1...s_{N-1}".into(), g(Gen::Pi), w(&pw));
    b.add(
        "transition s0",
        "s0 = s_{1N} X1^-1 X_N".into(),
        s0(n),
        w(&[Gen::Sij(1, n), Gen::Xinv(1), Gen::X(n)]),
    );
}

/// `(y_1 − z_i + ħ − kΣ_{j>1} s_{1j})`.
fn shifted_factor(n: usize, i: usize) -> OperatorExpr {
    let mut f = yl(1).sub(&p(Param::Zlow(i))).add(&p(Param::Hbar));
    for j in 2..=n {
        f = f.sub(&p(Param::K).compose(&sij(1, j)));
    }
    f
}

fn deg_cyc(b: &mut Builder, n: usize, l: usize) {
    let k = || p(Param::K);
    let hb = || p(Param::Hbar);
    let kss = || {
        let mut f = zero();
        for j in 2..=n {
            f = f.add(&k().compose(&sij(1, j)));
        }
        f
    };
    for i in 1..n {
        b.add("s y", format!("s y[i={i}]"), s(i).compose(&yl(i)), yl(i + 1).compose(&s(i)).add(&k()));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            b.add("[y,y]", format!("[y,y][i={i},j={j}]"), yl(i).commutator(&yl(j)), zero());
        }
    }
    let perm_image = |i: usize, j: usize, a: usize| if a == i { j } else if a == j { i } else { a };
    for (si, sj) in transpositions(n) {
        for a in 1..=n {
            let b_ = perm_image(si, sj, a);
            b.add("s X", format!("s X[s=({si}{sj}),i={a}]"), sij(si, sj).compose(&x(a)), x(b_).compose(&sij(si, sj)));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            b.add("[X,X]", format!("[X,X][i={i},j={j}]"), x(i).commutator(&x(j)), zero());
        }
    }
    for i in 2..=n {
        b.add("[y,X1]", format!("[y,X1][i={i}]"), yl(i).commutator(&x(1)), k().compose(&x(1)).compose(&sij(1, i)));
    }
    b.add("[y1,X1]", "[y1,X1]".into(), yl(1).commutator(&x(1)), hb().compose(&x(1)).sub(&x(1).compose(&kss())));
    for (si, sj) in transpositions(n) {
        for a in 1..=n {
            let b_ = perm_image(si, sj, a);
            b.add("s D", format!("s D[s=({si}{sj}),i={a}]"), sij(si, sj).compose(&dl(a)), dl(b_).compose(&sij(si, sj)));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            b.add("[D,D]", format!("[D,D][i={i},j={j}]"), dl(i).commutator(&dl(j)), zero());
        }
    }
    for j in 2..=n {
        let rhs = k().compose(&sij(1, j)).compose(&dl(1)).neg();
        b.add("[y,D1]", format!("[y,D1][j={j}]"), yl(j).commutator(&dl(1)), rhs);
    }
    b.add(
        "[y1,D1]",
        "[y1,D1]".into(),
        yl(1).commutator(&dl(1)),
        hb().compose(&dl(1)).neg().add(&kss().compose(&dl(1))),
    );
    // [D_1, X_1] and [D_1, X_m]
    let lower = |i: usize| yl(1).sub(&p(Param::Zlow(i)));
    let mut rhs11 = zero();
    for r in 1..=l {
        let mut term = one();
        for i in 1..r {
            term = term.compose(&shifted_factor(n, i));
        }
        term = term.compose(&hb().sub(&kss()));
        for i in r + 1..=l {
            term = term.compose(&lower(i));
        }
        rhs11 = rhs11.add(&term);
    }
    b.add("[D1,X1]", "[D1,X1]".into(), dl(1).commutator(&x(1)), rhs11);
    for m in 2..=n {
        let mut rhs = zero();
        for r in 1..=l {
            let mut term = k();
            for i in 1..r {
                term = term.compose(&shifted_factor(n, i));
            }
            term = term.compose(&sij(1, m));
            for i in r + 1..=l {
                term = term.compose(&lower(i));
            }
            rhs = rhs.add(&term);
        }
        b.add("[D1,Xm]", format!("[D1,Xm][m={m}]"), dl(1).commutator(&x(m)), rhs);
    }
    let mut pr = one();
    for i in 1..=l {
        pr = pr.compose(&lower(i));
    }
    b.add("X1 D1", "X1 D1".into(), x(1).compose(&dl(1)), pr);
    // conjugates ([D_i, X_m] for i > 1) generated by the S_N action
    let base: Vec<Relation> = b.rels.iter().filter(|r| r.schema.starts_with("[D1,X")).cloned().collect();
    for i in 2..=n {
        for r in &base {
            let (lhs, rhs) = (conjugate_deg(&r.lhs, 1, i), conjugate_deg(&r.rhs, 1, i));
            b.add("conj [D,X]", format!("s_(1{i}) {} s_(1{i})", r.name), lhs, rhs);
        }
    }
}

/// Image under the automorphism `Ad(s_{ab})`: `X`, `D`, `s` indices are permuted,
/// `y_j` becomes the word `s_{ab} y_j s_{ab}`.
pub fn conjugate_deg(e: &OperatorExpr, a: usize, b: usize) -> OperatorExpr {
    let sw = |i: usize| if i == a { b } else if i == b { a } else { i };
    e.map(
        &|gen| match gen {
            Gen::X(i) => x(sw(i)),
            Gen::Xinv(i) => g(Gen::Xinv(sw(i))),
            Gen::Dl(i) => dl(sw(i)),
            Gen::Sij(i, j) => {
                let (p0, q0) = (sw(i), sw(j));
                sij(p0.min(q0), p0.max(q0))
            }
            other => prod(&[sij(a, b), g(other), sij(a, b)]),
        },
        &|c0| c0.clone(),
    )
}

fn transpositions(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            v.push((i, j));
        }
    }
    v
}

fn cyc_daha(b: &mut Builder, n: usize, l: usize) {
    daha_relations(b, n, &[1, 2, 3, 4, 5, 6, 7, 11, 12]);
    let q = || p(Param::Q);
    for i in 1..=n {
        for j in i + 1..=n {
            b.add("cd1", format!("cd1[i={i},j={j}]"), x(i).compose(&y(j)), prod(&[y(j), x(i), conj_square(i, j, true, false)]));
            // the conjugating word is the inverse of the one in cd1
            b.add("cd2", format!("cd2[i={i},j={j}]"), y(i).compose(&x(j)), prod(&[conj_square(i, j, false, true), x(j), y(i)]));
        }
    }
    for i in 1..=n {
        b.add(
            "cd3",
            format!("cd3[i={i}]"),
            prod(&[y(i), a_word(i), x(i)]),
            prod(&[q(), x(i), b_word(i, n), y(i)]),
        );
    }
    for i in 1..=n {
        for j in i + 1..=n {
            b.add("cd4", format!("cd4[i={i},j={j}]"), dl(i).commutator(&dl(j)), zero());
        }
    }
    for i in 1..n {
        b.add("cd5", format!("cd5[i={i}]"), prod(&[ti(i), dl(i), ti(i)]), dl(i + 1));
    }
    for j in 1..n {
        for i in (1..=n).filter(|&i| i.abs_diff(j) >= 2) {
            b.add("cd5", format!("cd5[T{j},D{i}]"), t(j).commutator(&dl(i)), zero());
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            b.add("cd6", format!("cd6[i={i},j={j}]"), dl(i).compose(&y(j)), prod(&[y(j), conj_square(i, j, true, true), dl(i)]));
            b.add("cd7", format!("cd7[i={i},j={j}]"), prod(&[dl(j), conj_square(i, j, false, false), y(i)]), y(i).compose(&dl(j)));
        }
    }
    for i in 1..=n {
        b.add("cd8", format!("cd8[i={i}]"), prod(&[dl(i), y(i), a_word(i)]), prod(&[q(), b_word(i, n), y(i), dl(i)]));
    }
    let zf = |i: usize, base: &OperatorExpr| base.sub(&p(Param::Z(i)));
    let qjy = prod(&[q(), jucys_murphy(n), y(1)]);
    let prod_roots = |base: &OperatorExpr| {
        let mut acc = one();
        for i in 1..=l {
            acc = acc.compose(&zf(i, base));
        }
        acc
    };
    b.add("cd9", "cd9 X1 D1".into(), x(1).compose(&dl(1)), prod_roots(&y(1)));
    b.add("cd9", "cd9 D1 X1".into(), dl(1).compose(&x(1)), prod_roots(&qjy));
    if n >= 2 {
        let y2t = prod(&[y(2), ti(1), ti(1)]);
        let mut rhs = zero();
        for r in 1..=l {
            let mut term = one();
            for i in 1..r {
                term = term.compose(&zf(i, &qjy));
            }
            term = term.compose(&y2t);
            for i in r + 1..=l {
                term = term.compose(&zf(i, &y2t));
            }
            rhs = rhs.add(&term.compose(&t(1)));
        }
        b.add("cd10", "cd10".into(), dl(1).commutator(&x(2)), tt_diff().neg().compose(&rhs));
    }
}

fn l1(b: &mut Builder, n: usize) {
    daha_relations(b, n, &[1, 2, 3, 4, 5, 11]);
    let q = || p(Param::Q);
    for i in 1..n {
        b.add("D T D", format!("D=TDT[i={i}]"), dl(i), prod(&[t(i), dl(i + 1), t(i)]));
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            b.add("[T,D]", format!("[T,D][i={i},j={j}]"), t(i).commutator(&dl(j)), zero());
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            b.add("[D,D]", format!("[D,D][i={i},j={j}]"), dl(i).commutator(&dl(j)), zero());
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            if i < j {
                let rhs = prod(&[dl(j), conj_square(i, j, false, false), x(i)])
                    .add(&tt_diff().compose(&palindrome(i, j, true)));
                b.add("X D i<j", format!("X{i} D{j}"), x(i).compose(&dl(j)), rhs);
            } else if i > j {
                let rhs = prod(&[x(i), conj_square(j, i, true, true), dl(j)])
                    .sub(&tt_diff().compose(&palindrome(j, i, false)));
                b.add("D X i>j", format!("D{j} X{i}"), dl(j).compose(&x(i)), rhs);
            }
        }
    }
    let xs = sum(&(1..=n).map(x).collect::<Vec<_>>());
    for i in 1..=n {
        let coef = c(Coef::one().sub(&Coef::param_pow(Param::Q, -1)));
        let rhs = prod(&[coef, dl(i).compose(&x(i)).add(&one()), a_word(i)]);
        b.add("[D,sum X]", format!("[D{i},sum X]"), dl(i).commutator(&xs), rhs);
    }
    let _ = q;
}

fn lastrel(b: &mut Builder, n: usize) {
    let lhs = dl(1).compose(&x(1)).add(&one());
    let rhs = prod(&[p(Param::Q), jucys_murphy(n), x(1).compose(&dl(1)).add(&one())]);
    b.add("lastrel", "D1 X1 + 1 = q J_N (X1 D1 + 1)".into(), lhs, rhs);
}

/// Build the catalog of `id` expanded for rank `n` and level `l`.
pub fn catalog(id: CatalogId, n: usize, l: usize) -> Result<RelationCatalog, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::BadRank(n));
    }
    let mut b = Builder { rels: Vec::new() };
    match id {
        CatalogId::Daha => daha_relations(&mut b, n, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]),
        CatalogId::DegDaha => deg_daha(&mut b, n),
        CatalogId::DegCyc => deg_cyc(&mut b, n, l),
        CatalogId::CycDaha => cyc_daha(&mut b, n, l),
        CatalogId::L1 => l1(&mut b, n),
        CatalogId::Lastrel => lastrel(&mut b, n),
    }
    Ok(RelationCatalog { id, n, l: if id.needs_unit_z1() { 1 } else { l }, relations: b.rels })
}

/// The schema labels of each catalog, independent of `N`.
pub fn schema_labels(id: CatalogId) -> Vec<&'static str> {
    match id {
        CatalogId::Daha => vec!["R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "R10", "R11", "R12"],
        CatalogId::DegCyc => vec![
            "s y", "[y,y]", "s X", "[y,X1]", "[y1,X1]", "s D", "[y,D1]", "[y1,D1]", "[D1,X1]", "[D1,Xm]", "X1 D1",
        ],
        CatalogId::CycDaha => vec![
            "R1", "R2", "R3", "R4", "R5", "R6", "R7", "R11", "R12", "cd1", "cd2", "cd3", "cd4", "cd5", "cd6", "cd7",
            "cd8", "cd9", "cd10",
        ],
        CatalogId::Lastrel => vec!["lastrel"],
        CatalogId::DegDaha => vec![
            "s^2", "braid", "far", "pi s", "[y,y]", "pi y", "pi y_N", "s y", "s_0 y_N", "[s,y]", "[y,X] i>j",
            "[y,X] i<j", "[y,X] i=j", "s X", "[X,X]", "[y,prod X]", "[sum y,X]", "[y2,X1]", "transition pi",
            "transition s0",
        ],
        CatalogId::L1 => vec![
            "R1", "R2", "R3", "R4", "R5", "D T D", "[T,D]", "R11", "[D,D]", "X D i<j", "D X i>j", "[D,sum X]",
        ],
    }
}
