use std::fmt;
use std::str::FromStr;

use cyclodaha_core::{Field, Rational};
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::error::QuasiError;

/// Which family of quasiinvariance conditions is imposed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `(1 − s_ij)F` divisible by `Π_{p=−m}^{m}(X_i − q^p X_j)`.
    PlainQ,
    /// Cyclotomic conditions in variables `x_i` with `X_i = x_i^l`.
    Cyc,
    /// `X^a F` quasiinvariant to order `2m+1` along `X_i = X_j`.
    Twisted,
    /// `X^a F` satisfying the `q`-deformed conditions.
    TwistedQ,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::PlainQ, Variant::Cyc, Variant::Twisted, Variant::TwistedQ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::PlainQ => "plain-q",
            Variant::Cyc => "cyc",
            Variant::Twisted => "twisted",
            Variant::TwistedQ => "twisted-q",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = QuasiError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| QuasiError::BadSpec(format!("unknown variant '{s}'")))
    }
}

/// Restriction to the `±1` eigenspace of a transposition: `s_ij F = sign·F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Parity {
    pub i: usize,
    pub j: usize,
    pub sign: i8,
}

/// Parameters of one quasiinvariant space.
///
/// `q` is the deformation parameter of the variant: `q` itself for
/// [`Variant::PlainQ`], the root `𝐪` with `q = 𝐪^l` for [`Variant::Cyc`], and
/// the base `𝗊` with `q = 𝗊^M` for [`Variant::TwistedQ`], where `M` is the
/// common denominator of the twists. It is ignored by [`Variant::Twisted`].
/// The value `1` selects order-`(2m+1)` vanishing.
#[derive(Clone, Debug, PartialEq)]
pub struct QuasiSpec {
    pub variant: Variant,
    pub n: usize,
    pub m: u32,
    pub l: usize,
    /// `m_1, …, m_{l−1}` of the cyclotomic projector conditions.
    pub mr: Vec<u32>,
    /// Twists `a_1, …, a_N`; all zero for untwisted variants.
    pub a: Vec<Rational>,
    pub q: Rational,
    pub parity: Option<Parity>,
}

impl QuasiSpec {
    pub fn plain_q(n: usize, m: u32, q: Rational) -> Self {
        QuasiSpec { variant: Variant::PlainQ, n, m, l: 1, mr: vec![], a: vec![Rational::zero(); n], q, parity: None }
    }

    /// `Q^l_{m,m_1,…,m_{l−1},𝐪}` with `l = mr.len() + 1`.
    pub fn cyclotomic(n: usize, m: u32, mr: Vec<u32>, bold_q: Rational) -> Self {
        QuasiSpec {
            variant: Variant::Cyc,
            n,
            m,
            l: mr.len() + 1,
            mr,
            a: vec![Rational::zero(); n],
            q: bold_q,
            parity: None,
        }
    }

    pub fn twisted(m: u32, a: Vec<Rational>) -> Self {
        QuasiSpec { variant: Variant::Twisted, n: a.len(), m, l: 1, mr: vec![], a, q: Rational::one(), parity: None }
    }

    pub fn twisted_q(m: u32, a: Vec<Rational>, base: Rational) -> Self {
        QuasiSpec { variant: Variant::TwistedQ, n: a.len(), m, l: 1, mr: vec![], a, q: base, parity: None }
    }

    /// Restrict to `s_ij F = sign·F` (0-based indices).
    pub fn with_parity(mut self, i: usize, j: usize, sign: i8) -> Self {
        self.parity = Some(Parity { i, j, sign });
        self
    }

    /// Whether the conditions are the `q = 1` order-of-vanishing ones.
    pub fn is_classical(&self) -> bool {
        self.variant == Variant::Twisted || self.q.is_one()
    }

    /// Common denominator `M` of the twists.
    pub fn denominator(&self) -> i64 {
        self.a
            .iter()
            .fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(x.denom()))
            .to_i64()
            .expect("denominator fits in i64")
    }

    /// `a_i − a_j ∉ ℤ∖{0}` for all `i < j`.
    pub fn generic_twists(&self) -> bool {
        for i in 0..self.n {
            for j in i + 1..self.n {
                let d = &self.a[i] - &self.a[j];
                if d.is_integer() && !d.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn validate(&self) -> Result<(), QuasiError> {
        let bad = |s: String| Err(QuasiError::BadSpec(s));
        if self.n == 0 {
            return bad("N must be positive".into());
        }
        if self.a.len() != self.n {
            return bad(format!("{} twists given for N = {}", self.a.len(), self.n));
        }
        if self.l == 0 || self.mr.len() + 1 != self.l {
            return bad(format!("l = {} needs {} cyclotomic multiplicities", self.l, self.l.saturating_sub(1)));
        }
        if self.variant != Variant::Cyc && self.l != 1 {
            return bad("only the cyclotomic variant takes l > 1".into());
        }
        if matches!(self.variant, Variant::PlainQ | Variant::Cyc) && self.a.iter().any(|x| !x.is_zero()) {
            return bad(format!("the {} variant takes no twists", self.variant));
        }
        if let Some(p) = self.parity {
            if p.i == p.j || p.i >= self.n || p.j >= self.n || !(p.sign == 1 || p.sign == -1) {
                return bad(format!("bad parity restriction {p:?}"));
            }
        }
        if self.variant == Variant::Twisted {
            return Ok(());
        }
        let q = &self.q;
        if q.is_zero() {
            return Err(QuasiError::ParameterDegenerate("q = 0".into()));
        }
        if !q.is_one() && (1..=24).any(|k| q.pow(k).is_some_and(|v| v.is_one())) {
            return Err(QuasiError::ParameterDegenerate(format!("{q} is a root of unity, so the points q^p collide")));
        }
        if self.variant == Variant::TwistedQ && q.is_negative() {
            return Err(QuasiError::ParameterDegenerate("the twisted-q base must be positive".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "variant": self.variant.name(),
            "N": self.n,
            "m": self.m,
            "l": self.l,
            "mr": self.mr,
            "a": self.a.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "q": self.q.to_string(),
            "generic_twists": self.generic_twists(),
            "parity": self.parity.map(|p| json!({"i": p.i, "j": p.j, "sign": p.sign})),
        })
    }
}
