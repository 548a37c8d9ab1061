use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;

use crate::error::CoreError;
use crate::field::Field;
use crate::rational::Rational;

/// Exponent vector of a Laurent monomial `X_1^{e_1}⋯X_N^{e_N}`.
///
/// Ordered graded-lexicographically: first by total degree, then
/// lexicographically on the exponents.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    /// `X_i` (0-based) in `n` variables.
    pub fn var(n: usize, i: usize) -> Monomial {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&x| x as i64).sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Monomial) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Monomial) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Every exponent vector in `[-b, b]^n`, in graded-lex order.
pub fn box_monomials(n: usize, b: i32) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = (0..n)
        .map(|_| -b..=b)
        .multi_cartesian_product()
        .map(Monomial)
        .collect();
    if n == 0 {
        v = vec![Monomial(vec![])];
    }
    v.sort();
    v
}

/// Every nonnegative exponent vector of total degree `d` in `n` variables.
pub fn homogeneous_monomials(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, cur: &mut Vec<i32>, out: &mut Vec<Monomial>) {
        if cur.len() + 1 == n {
            cur.push(d as i32);
            out.push(Monomial(cur.clone()));
            cur.pop();
            return;
        }
        for k in (0..=d).rev() {
            cur.push(k as i32);
            rec(n, d - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial(vec![]));
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// A per-variable substitution rule.
#[derive(Clone, Debug)]
pub enum Subst<F> {
    /// `X_i ↦ scale · X_target`.
    Var { target: usize, scale: F },
    /// `X_i ↦ value`.
    Const(F),
}

impl<F: Field> Subst<F> {
    pub fn keep(i: usize) -> Subst<F> {
        Subst::Var { target: i, scale: F::one() }
    }
}

/// Sparse Laurent polynomial in `n` variables over `F`. Zero coefficients
/// are never stored.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<F> {
    n: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> LaurentPoly<F> {
    pub fn zero(n: usize) -> Self {
        LaurentPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, F::one())
    }

    pub fn constant(n: usize, c: F) -> Self {
        Self::term(Monomial::one(n), c)
    }

    pub fn term(e: Monomial, c: F) -> Self {
        let n = e.0.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { n, terms }
    }

    pub fn monomial(e: Monomial) -> Self {
        Self::term(e, F::one())
    }

    /// `X_i` (0-based).
    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(n, i))
    }

    pub fn from_terms(n: usize, it: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, F)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Monomial) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, e: Monomial, c: F) {
        debug_assert_eq!(e.0.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Self, s: &F) {
        if s.is_zero() {
            return;
        }
        for (e, c) in &o.terms {
            self.add_term(e.clone(), c.clone() * s);
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.clone() * s)).collect(),
        }
    }

    /// Multiply by the monomial `X^e`.
    pub fn shift(&self, e: &Monomial) -> Self {
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.mul(e), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> LaurentPoly<G> {
        LaurentPoly::from_terms(self.n, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Monomial::is_polynomial)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.keys().map(Monomial::degree).all_equal()
    }

    /// Per-variable `(min, max)` exponents, `None` for the zero polynomial.
    pub fn exponent_bounds(&self) -> Option<Vec<(i32, i32)>> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut b: Vec<(i32, i32)> = first.0.iter().map(|&x| (x, x)).collect();
        for e in it {
            for (k, &x) in e.0.iter().enumerate() {
                b[k].0 = b[k].0.min(x);
                b[k].1 = b[k].1.max(x);
            }
        }
        Some(b)
    }

    /// Apply one rule per variable. Errors when a zero scale or zero
    /// constant would be raised to a negative power.
    pub fn substitute(&self, rules: &[Subst<F>]) -> Result<Self, CoreError> {
        assert_eq!(rules.len(), self.n, "one substitution rule per variable");
        let mut pow_cache: Vec<BTreeMap<i32, F>> = vec![BTreeMap::new(); self.n];
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut m = vec![0i32; self.n];
            for (i, &a) in e.0.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let (s, target) = match &rules[i] {
                    Subst::Var { target, scale } => (scale, Some(*target)),
                    Subst::Const(v) => (v, None),
                };
                if let Some(t) = target {
                    m[t] += a;
                }
                if !s.is_one() {
                    let p = match pow_cache[i].get(&a) {
                        Some(p) => p.clone(),
                        None => {
                            let p = s.pow(a as i64).ok_or(CoreError::NonInvertibleScale(i))?;
                            pow_cache[i].insert(a, p.clone());
                            p
                        }
                    };
                    coeff = coeff * &p;
                }
            }
            out.add_term(Monomial(m), coeff);
        }
        Ok(out)
    }

    /// `X_i ↦ X_{σ(i)}`.
    pub fn permute(&self, sigma: &[usize]) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut m = vec![0; self.n];
            for (i, &a) in e.0.iter().enumerate() {
                m[sigma[i]] = a;
            }
            out.terms.insert(Monomial(m), c.clone());
        }
        out
    }

    /// Exchange `X_i` and `X_j`.
    pub fn swap(&self, i: usize, j: usize) -> Self {
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut m = e.clone();
                    m.0.swap(i, j);
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// `X_i ↦ s·X_i`; `s` must be invertible when `X_i` has negative exponents.
    pub fn scale_var(&self, i: usize, s: &F) -> Result<Self, CoreError> {
        let mut rules: Vec<Subst<F>> = (0..self.n).map(Subst::keep).collect();
        rules[i] = Subst::Var { target: i, scale: s.clone() };
        self.substitute(&rules)
    }

    /// `(1/N!) Σ_{w ∈ S_N} w·p`.
    pub fn symmetrize(&self) -> Self {
        let mut acc = Self::zero(self.n);
        let mut count = 0i64;
        for perm in (0..self.n).permutations(self.n) {
            acc = &acc + &self.permute(&perm);
            count += 1;
        }
        acc.scale(&F::from_rational(&Rational::new(1, count.max(1))))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| self.swap(i, i + 1) == *self)
    }

    /// `∂/∂X_i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let a = e.0[i];
            if a == 0 {
                continue;
            }
            let mut m = e.clone();
            m.0[i] -= 1;
            out.add_term(m, c.clone() * F::from_i64(a as i64));
        }
        out
    }

    /// Exact quotient `self / d`, or `NotDivisible`.
    ///
    /// Leading terms are cancelled in graded-lex order. Quotient exponents are
    /// confined to the box `[min_p − min_d, max_p − max_d]`, which bounds the
    /// loop. The result is verified by multiplying back.
    pub fn exact_divide(&self, d: &Self) -> Result<Self, CoreError> {
        let (dlead_e, dlead_c) = d.leading_term().ok_or(CoreError::DivisionByZero)?;
        let dlead_inv = dlead_c.inv().unwrap();
        if self.is_zero() {
            return Ok(Self::zero(self.n));
        }
        let pb = self.exponent_bounds().unwrap();
        let db = d.exponent_bounds().unwrap();
        let lo: Vec<i32> = pb.iter().zip(&db).map(|(p, q)| p.0 - q.0).collect();
        let hi: Vec<i32> = pb.iter().zip(&db).map(|(p, q)| p.1 - q.1).collect();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.n);
        while let Some((e, c)) = rem.leading_term() {
            let qe = e.div(dlead_e);
            if qe.0.iter().enumerate().any(|(k, &x)| x < lo[k] || x > hi[k]) {
                return Err(CoreError::NotDivisible(format!("{self} by {d}")));
            }
            let qc = c.clone() * &dlead_inv;
            for (de, dc) in &d.terms {
                rem.add_term(de.mul(&qe), -(dc.clone() * &qc));
            }
            quot.add_term(qe, qc);
        }
        if &quot * d != *self {
            return Err(CoreError::NotDivisible(format!("{self} by {d} (verification)")));
        }
        Ok(quot)
    }

    /// The divided difference `(f − f*)/(X_i − c·X_r)` where `f*` is `f` with
    /// `X_i ↦ c·X_r` and `X_r ↦ c⁻¹·X_i`. With `c = 1` this is
    /// `(1 − s_{ir})f/(X_i − X_r)`. Computed monomial by monomial in closed form.
    pub fn divided_difference(&self, i: usize, r: usize, c: &F) -> Self {
        assert!(i != r);
        let cinv = c.inv().expect("divided difference needs an invertible scale");
        let mut cpow: BTreeMap<i64, F> = BTreeMap::new();
        let mut cp = |k: i64| -> F {
            cpow.entry(k)
                .or_insert_with(|| if k >= 0 { c.pow(k).unwrap() } else { cinv.pow(-k).unwrap() })
                .clone()
        };
        let mut out = Self::zero(self.n);
        for (e, coef) in &self.terms {
            let (a, b) = (e.0[i], e.0[r]);
            if a == b {
                continue;
            }
            // f - f* = c^{-b} M (X_i^a w^b - w^a X_i^b), w = c X_r
            let (lo, d, sign) = if a > b { (b, a - b, 1i64) } else { (a, b - a, -1i64) };
            let base = coef.clone() * &cp(-(b as i64)) * &F::from_i64(sign);
            for k in 0..d {
                let wexp = lo + (d - 1 - k);
                let mut m = e.clone();
                m.0[i] = lo + k;
                m.0[r] = wexp;
                out.add_term(m, base.clone() * &cp(wexp as i64));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "N": self.n,
            "terms": self.terms.iter().map(|(e, c)| serde_json::json!({
                "e": e.0,
                "c": c.to_json(),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, CoreError> {
        let bad = |m: &str| CoreError::Parse(format!("polynomial JSON: {m}"));
        let n = v.get("N").and_then(|x| x.as_u64()).ok_or_else(|| bad("missing N"))? as usize;
        let terms = v.get("terms").and_then(|x| x.as_array()).ok_or_else(|| bad("missing terms"))?;
        let mut p = Self::zero(n);
        for t in terms {
            let e = t
                .get("e")
                .and_then(|x| x.as_array())
                .ok_or_else(|| bad("term without e"))?
                .iter()
                .map(|x| x.as_i64().map(|y| y as i32).ok_or_else(|| bad("bad exponent")))
                .collect::<Result<Vec<_>, _>>()?;
            if e.len() != n {
                return Err(bad("exponent length differs from N"));
            }
            let c = F::from_json(t.get("c").ok_or_else(|| bad("term without c"))?)?;
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }
}

impl<F: Field> fmt::Display for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a != 0)
                    .map(|(k, &a)| if a == 1 { format!("X{}", k + 1) } else { format!("X{}^{a}", k + 1) })
                    .collect();
                match (mono.is_empty(), c.is_one()) {
                    (true, _) => format!("{c}"),
                    (false, true) => mono.join("*"),
                    (false, false) => format!("({c})*{}", mono.join("*")),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<F: Field> fmt::Debug for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a, F: Field> Add<&'a LaurentPoly<F>> for &'a LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn add(self, o: &'a LaurentPoly<F>) -> LaurentPoly<F> {
        let (big, small) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        let mut out = big.clone();
        for (e, c) in &small.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a, F: Field> Sub<&'a LaurentPoly<F>> for &'a LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn sub(self, o: &'a LaurentPoly<F>) -> LaurentPoly<F> {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<'a, F: Field> Mul<&'a LaurentPoly<F>> for &'a LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn mul(self, o: &'a LaurentPoly<F>) -> LaurentPoly<F> {
        let mut out = LaurentPoly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1.mul(e2), c1.clone() * c2);
            }
        }
        out
    }
}

impl<F: Field> Neg for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn neg(self) -> LaurentPoly<F> {
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly<Rational>;

    fn x(n: usize, i: usize) -> P {
        P::var(n, i)
    }

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn substitute_examples() {
        let p = &x(2, 0) * &x(2, 1);
        let qq = q(3, 2);
        let r = p
            .substitute(&[Subst::Var { target: 0, scale: qq.clone() }, Subst::keep(1)])
            .unwrap();
        assert_eq!(r, p.scale(&qq));
        let d = &x(2, 0) - &x(2, 1);
        let s = d.substitute(&[Subst::Var { target: 1, scale: qq.clone() }, Subst::keep(1)]).unwrap();
        assert_eq!(s, x(2, 1).scale(&(qq - Rational::one())));
    }

    #[test]
    fn zero_scale_on_negative_exponent() {
        let p = P::monomial(Monomial(vec![-1]));
        let e = p.substitute(&[Subst::Const(Rational::zero())]);
        assert_eq!(e, Err(CoreError::NonInvertibleScale(0)));
    }

    #[test]
    fn exact_divide_examples() {
        let (a, b) = (x(2, 0), x(2, 1));
        assert_eq!((&b - &a).exact_divide(&(&a - &b)).unwrap(), P::constant(2, -Rational::one()));
        let sq = &(&a * &a) - &(&b * &b);
        assert_eq!(sq.exact_divide(&(&a - &b)).unwrap(), &a + &b);
        let f = &(&(&a * &a) * &b) - &(&(&b * &b) * &a);
        assert_eq!(f.exact_divide(&(&a - &b)).unwrap(), &a * &b);
        assert!(matches!((&a + &b).exact_divide(&(&a - &b)), Err(CoreError::NotDivisible(_))));
    }

    #[test]
    fn symmetrize_examples() {
        let s = x(2, 0).symmetrize();
        assert_eq!(s, (&x(2, 0) + &x(2, 1)).scale(&q(1, 2)));
        assert!((&x(2, 0) * &x(2, 1)).is_symmetric());
        let p = P::monomial(Monomial(vec![2, 1, 0]));
        let orbit = [[2, 1, 0], [2, 0, 1], [1, 2, 0], [0, 2, 1], [1, 0, 2], [0, 1, 2]];
        let expect = P::from_terms(3, orbit.iter().map(|e| (Monomial(e.to_vec()), q(1, 6))));
        assert_eq!(p.symmetrize(), expect);
    }

    #[test]
    fn divided_difference_matches_division() {
        let p = P::from_terms(
            3,
            [
                (Monomial(vec![3, -1, 2]), q(2, 3)),
                (Monomial(vec![-2, 1, 0]), q(-5, 1)),
                (Monomial(vec![0, 4, 1]), q(7, 2)),
            ],
        );
        let c = q(5, 7);
        let num = &p
            - &p.substitute(&[
                Subst::Var { target: 2, scale: c.clone() },
                Subst::keep(1),
                Subst::Var { target: 0, scale: c.inv().unwrap() },
            ])
            .unwrap();
        let den = &x(3, 0) - &x(3, 2).scale(&c);
        assert_eq!(p.divided_difference(0, 2, &c), num.exact_divide(&den).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let p = P::from_terms(2, [(Monomial(vec![1, -2]), q(3, 4)), (Monomial(vec![0, 0]), q(-1, 1))]);
        assert_eq!(P::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn homogeneous_counts() {
        assert_eq!(homogeneous_monomials(3, 4).len(), 15);
        assert_eq!(box_monomials(2, 1).len(), 9);
    }
}
