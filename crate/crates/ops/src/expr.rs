//! Formal linear combinations of generator words.

use std::collections::BTreeMap;
use std::fmt;

use crate::coef::{Coef, Param};
use crate::error::OpsError;
use crate::gen::Gen;

/// A word read left to right; as an operator the rightmost letter acts first.
pub type Word = Vec<Gen>;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct OperatorExpr {
    terms: BTreeMap<Word, Coef>,
}

impl OperatorExpr {
    pub fn zero() -> Self {
        OperatorExpr { terms: BTreeMap::new() }
    }
    pub fn one() -> Self {
        OperatorExpr::scalar(Coef::one())
    }
    pub fn scalar(c: Coef) -> Self {
        OperatorExpr::term(c, Vec::new())
    }
    pub fn int(n: i64) -> Self {
        OperatorExpr::scalar(Coef::int(n))
    }
    pub fn param(p: Param) -> Self {
        OperatorExpr::scalar(Coef::param(p))
    }
    pub fn gen(g: Gen) -> Self {
        OperatorExpr::term(Coef::one(), vec![g])
    }
    pub fn word(w: Word) -> Self {
        OperatorExpr::term(Coef::one(), w)
    }
    pub fn term(c: Coef, w: Word) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        OperatorExpr { terms }
    }
    /// Product of generators in the given order.
    pub fn product(gens: impl IntoIterator<Item = Gen>) -> Self {
        OperatorExpr::word(gens.into_iter().collect())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coef)> {
        self.terms.iter()
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
    /// Longest word length, used to size default equality boxes.
    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }
    pub fn generators(&self) -> impl Iterator<Item = Gen> + '_ {
        self.terms.keys().flat_map(|w| w.iter().copied())
    }

    fn add_term(&mut self, w: Word, c: Coef) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, o: &OperatorExpr) -> OperatorExpr {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c.clone());
        }
        r
    }
    pub fn neg(&self) -> OperatorExpr {
        self.scale(&Coef::int(-1))
    }
    pub fn sub(&self, o: &OperatorExpr) -> OperatorExpr {
        self.add(&o.neg())
    }
    pub fn scale(&self, c: &Coef) -> OperatorExpr {
        let mut r = OperatorExpr::zero();
        for (w, v) in &self.terms {
            r.add_term(w.clone(), v.mul(c));
        }
        r
    }
    /// Operator composition `self ∘ o`.
    pub fn compose(&self, o: &OperatorExpr) -> OperatorExpr {
        let mut r = OperatorExpr::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                r.add_term(w, c1.mul(c2));
            }
        }
        r
    }
    pub fn pow(&self, k: u32) -> OperatorExpr {
        let mut acc = OperatorExpr::one();
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }
    /// `[a, b] = ab − ba`.
    pub fn commutator(&self, o: &OperatorExpr) -> OperatorExpr {
        self.compose(o).sub(&o.compose(self))
    }

    /// The inverse of a single scaled word whose letters all have tagged inverses.
    pub fn try_inverse(&self) -> Result<OperatorExpr, OpsError> {
        let bad = || OpsError::NotInvertible(self.to_string());
        if self.terms.len() != 1 {
            return Err(bad());
        }
        let (w, c) = self.terms.iter().next().unwrap();
        let ci = c.inv().ok_or_else(bad)?;
        let mut inv = Vec::with_capacity(w.len());
        for g in w.iter().rev() {
            inv.push(g.inverse().ok_or_else(bad)?);
        }
        Ok(OperatorExpr::term(ci, inv))
    }

    /// Apply a letter-wise substitution and a coefficient transformation.
    pub fn map(&self, letter: &dyn Fn(Gen) -> OperatorExpr, coef: &dyn Fn(&Coef) -> Coef) -> OperatorExpr {
        let mut r = OperatorExpr::zero();
        for (w, c) in &self.terms {
            let mut acc = OperatorExpr::scalar(coef(c));
            for g in w {
                acc = acc.compose(&letter(*g));
            }
            r = r.add(&acc);
        }
        r
    }
}

impl From<Gen> for OperatorExpr {
    fn from(g: Gen) -> Self {
        OperatorExpr::gen(g)
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let word: Vec<String> = w.iter().map(|g| g.to_string()).collect();
            match (c.is_one(), w.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "[{}]", word.join(" "))?,
                (false, true) => write!(f, "({c})")?,
                (false, false) => write!(f, "({c})*[{}]", word.join(" "))?,
            }
        }
        Ok(())
    }
}

/// Shorthand for building expressions in catalogs.
pub mod build {
    use super::*;

    pub fn g(x: Gen) -> OperatorExpr {
        OperatorExpr::gen(x)
    }
    pub fn w(xs: &[Gen]) -> OperatorExpr {
        OperatorExpr::word(xs.to_vec())
    }
    pub fn c(x: Coef) -> OperatorExpr {
        OperatorExpr::scalar(x)
    }
    pub fn n(k: i64) -> OperatorExpr {
        OperatorExpr::int(k)
    }
    pub fn p(x: Param) -> OperatorExpr {
        OperatorExpr::param(x)
    }
    /// Product of expressions left to right.
    pub fn prod(xs: &[OperatorExpr]) -> OperatorExpr {
        xs.iter().fold(OperatorExpr::one(), |a, b| a.compose(b))
    }
    pub fn sum(xs: &[OperatorExpr]) -> OperatorExpr {
        xs.iter().fold(OperatorExpr::zero(), |a, b| a.add(b))
    }
}
