//! Scalar coefficients of operator expressions: rational functions in the
//! named parameters of a representation, kept symbolic until evaluation.

use std::collections::BTreeMap;
use std::fmt;

use cyclodaha_core::{Field, Rational};

use crate::error::OpsError;

/// A named scalar parameter. Indices of `Z`, `Zlow` are 1-based, `C` is 0-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Param {
    Q,
    /// The square root `𝐭` of `t`; the plain `t` is always `𝐭²`.
    Tt,
    Hbar,
    K,
    Z(usize),
    Zlow(usize),
    C(usize),
    Zeta,
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Q => write!(f, "q"),
            Param::Tt => write!(f, "tt"),
            Param::Hbar => write!(f, "hbar"),
            Param::K => write!(f, "k"),
            Param::Z(i) => write!(f, "Z{i}"),
            Param::Zlow(i) => write!(f, "z{i}"),
            Param::C(j) => write!(f, "c{j}"),
            Param::Zeta => write!(f, "zeta"),
        }
    }
}

/// A Laurent monomial in the parameters, sorted, with no zero exponents.
pub type PMono = Vec<(Param, i32)>;

fn pmono_mul(a: &PMono, b: &PMono) -> PMono {
    let mut m: BTreeMap<Param, i32> = a.iter().cloned().collect();
    for (p, e) in b {
        *m.entry(*p).or_insert(0) += e;
    }
    m.into_iter().filter(|(_, e)| *e != 0).collect()
}

fn pmono_inv(a: &PMono) -> PMono {
    a.iter().map(|(p, e)| (*p, -e)).collect()
}

/// A Laurent polynomial in the parameters over ℚ.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct PPoly(BTreeMap<PMono, Rational>);

impl PPoly {
    pub fn zero() -> Self {
        PPoly(BTreeMap::new())
    }
    pub fn constant(c: Rational) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(Vec::new(), c);
        }
        PPoly(m)
    }
    pub fn monomial(m: PMono, c: Rational) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert(m, c);
        }
        PPoly(t)
    }
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    pub fn terms(&self) -> impl Iterator<Item = (&PMono, &Rational)> {
        self.0.iter()
    }
    fn add_term(&mut self, m: PMono, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&m) {
            Some(v) => {
                *v = v.clone() + &c;
                if v.is_zero() {
                    self.0.remove(&m);
                }
            }
            None => {
                self.0.insert(m, c);
            }
        }
    }
    pub fn add(&self, o: &PPoly) -> PPoly {
        let mut r = self.clone();
        for (m, c) in &o.0 {
            r.add_term(m.clone(), c.clone());
        }
        r
    }
    pub fn neg(&self) -> PPoly {
        PPoly(self.0.iter().map(|(m, c)| (m.clone(), -c.clone())).collect())
    }
    pub fn mul(&self, o: &PPoly) -> PPoly {
        let mut r = PPoly::zero();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &o.0 {
                r.add_term(pmono_mul(m1, m2), c1.clone() * c2);
            }
        }
        r
    }
    fn single_term(&self) -> Option<(&PMono, &Rational)> {
        if self.0.len() == 1 {
            self.0.iter().next()
        } else {
            None
        }
    }
    pub fn eval<F: Field>(&self, val: &dyn Fn(Param) -> Option<F>) -> Result<F, OpsError> {
        let mut acc = F::zero();
        for (m, c) in &self.0 {
            let mut t = F::from_rational(c);
            for (p, e) in m {
                let v = val(*p).ok_or_else(|| OpsError::MissingParam(p.to_string()))?;
                t = t * &v.pow(*e as i64).ok_or(OpsError::SingularCoefficient)?;
            }
            acc = acc + &t;
        }
        Ok(acc)
    }
    pub fn subst(&self, f: &dyn Fn(Param) -> Coef) -> Coef {
        let mut acc = Coef::zero();
        for (m, c) in &self.0 {
            let mut t = Coef::rational(c.clone());
            for (p, e) in m {
                t = t.mul(&f(*p).pow(*e));
            }
            acc = acc.add(&t);
        }
        acc
    }
}

impl fmt::Display for PPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m.is_empty() || !c.is_one() {
                write!(f, "({c})")?;
            }
            for (j, (p, e)) in m.iter().enumerate() {
                if j > 0 || !c.is_one() {
                    write!(f, "*")?;
                }
                if *e == 1 {
                    write!(f, "{p}")?;
                } else {
                    write!(f, "{p}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// A rational function `num/den` of parameters. The denominator is `1`
/// whenever it can be absorbed as a Laurent monomial.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Coef {
    num: PPoly,
    den: PPoly,
}

impl Coef {
    pub fn zero() -> Self {
        Coef { num: PPoly::zero(), den: PPoly::constant(Rational::from_i64(1)) }
    }
    pub fn one() -> Self {
        Coef::rational(Rational::from_i64(1))
    }
    pub fn rational(c: Rational) -> Self {
        Coef { num: PPoly::constant(c), den: PPoly::constant(Rational::from_i64(1)) }
    }
    pub fn int(n: i64) -> Self {
        Coef::rational(Rational::from_i64(n))
    }
    pub fn param(p: Param) -> Self {
        Coef::param_pow(p, 1)
    }
    pub fn param_pow(p: Param, e: i32) -> Self {
        let m = if e == 0 { Vec::new() } else { vec![(p, e)] };
        Coef { num: PPoly::monomial(m, Rational::from_i64(1)), den: PPoly::constant(Rational::from_i64(1)) }
    }
    /// `t = 𝐭²`.
    pub fn t() -> Self {
        Coef::param_pow(Param::Tt, 2)
    }
    /// `𝐭 − 𝐭⁻¹`.
    pub fn tt_minus_inv() -> Self {
        Coef::param(Param::Tt).sub(&Coef::param_pow(Param::Tt, -1))
    }
    pub fn from_ppoly(num: PPoly) -> Self {
        Coef { num, den: PPoly::constant(Rational::from_i64(1)) }
    }
    pub fn numer(&self) -> &PPoly {
        &self.num
    }
    pub fn denom(&self) -> &PPoly {
        &self.den
    }
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    pub fn is_one(&self) -> bool {
        self.num == self.den
    }
    /// The constant value when the coefficient involves no parameter.
    pub fn as_rational(&self) -> Option<Rational> {
        let n = match self.num.single_term() {
            None if self.num.is_zero() => Rational::from_i64(0),
            Some((m, c)) if m.is_empty() => c.clone(),
            _ => return None,
        };
        match self.den.single_term() {
            Some((m, c)) if m.is_empty() => Some(n / c.clone()),
            _ => None,
        }
    }

    fn normalized(num: PPoly, den: PPoly) -> Coef {
        if num.is_zero() {
            return Coef::zero();
        }
        if let Some((m, c)) = den.single_term() {
            let inv = PPoly::monomial(pmono_inv(m), Rational::from_i64(1) / c.clone());
            return Coef { num: num.mul(&inv), den: PPoly::constant(Rational::from_i64(1)) };
        }
        if num == den {
            return Coef::one();
        }
        Coef { num, den }
    }

    pub fn add(&self, o: &Coef) -> Coef {
        if self.den == o.den {
            return Coef::normalized(self.num.add(&o.num), self.den.clone());
        }
        Coef::normalized(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    pub fn neg(&self) -> Coef {
        Coef { num: self.num.neg(), den: self.den.clone() }
    }
    pub fn sub(&self, o: &Coef) -> Coef {
        self.add(&o.neg())
    }
    pub fn mul(&self, o: &Coef) -> Coef {
        Coef::normalized(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    pub fn inv(&self) -> Option<Coef> {
        if self.num.is_zero() {
            return None;
        }
        Some(Coef::normalized(self.den.clone(), self.num.clone()))
    }
    pub fn pow(&self, e: i32) -> Coef {
        let base = if e < 0 { self.inv().expect("inverse of zero coefficient") } else { self.clone() };
        let mut acc = Coef::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    pub fn eval<F: Field>(&self, val: &dyn Fn(Param) -> Option<F>) -> Result<F, OpsError> {
        let n = self.num.eval(val)?;
        let d = self.den.eval(val)?;
        d.inv().map(|di| n * di).ok_or(OpsError::SingularCoefficient)
    }

    /// Replace every parameter by a coefficient.
    pub fn subst(&self, f: &dyn Fn(Param) -> Coef) -> Coef {
        let n = self.num.subst(f);
        let d = self.den.subst(f);
        n.mul(&d.inv().expect("substitution annihilates a denominator"))
    }
}

impl fmt::Display for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.single_term().is_some_and(|(m, c)| m.is_empty() && c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl From<Rational> for Coef {
    fn from(r: Rational) -> Self {
        Coef::rational(r)
    }
}

impl From<Param> for Coef {
    fn from(p: Param) -> Self {
        Coef::param(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn val(p: Param) -> Option<Rational> {
        match p {
            Param::Q => Some(Rational::new(3, 2)),
            Param::Tt => Some(Rational::new(5, 7)),
            _ => None,
        }
    }

    #[test]
    fn arithmetic_and_evaluation() {
        let tt = Coef::param(Param::Tt);
        let c = tt.sub(&tt.inv().unwrap());
        let v: Rational = c.eval(&val).unwrap();
        assert_eq!(v, Rational::new(5, 7) - Rational::new(7, 5));
        let one = c.mul(&c.inv().unwrap());
        assert!(one.is_one());
        let t: Rational = Coef::t().eval(&val).unwrap();
        assert_eq!(t, Rational::new(25, 49));
        assert!(c.sub(&c).is_zero());
    }

    #[test]
    fn substitution_inverts_parameters() {
        let c = Coef::param(Param::Q).mul(&Coef::param_pow(Param::Tt, 2));
        let inv = c.subst(&|p| Coef::param_pow(p, -1));
        assert!(c.mul(&inv).is_one());
        let missing: Result<Rational, _> = Coef::param(Param::K).eval(&val);
        assert!(matches!(missing, Err(OpsError::MissingParam(_))));
    }
}
