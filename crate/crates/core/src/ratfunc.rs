use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::CoreError;
use crate::field::Field;
use crate::rational::{rational_from_json, Rational};
use crate::upoly::UPoly;

/// Name of the single symbolic parameter of a [`RatFunc`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    T,
    Q,
    BoldT,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::Q => "q",
            Var::BoldT => "𝐭",
        }
    }

    pub fn parse(s: &str) -> Result<Var, CoreError> {
        match s {
            "t" => Ok(Var::T),
            "q" => Ok(Var::Q),
            "𝐭" | "bt" | "tt" => Ok(Var::BoldT),
            _ => Err(CoreError::Parse(format!("unknown parameter variable '{s}'"))),
        }
    }
}

/// A univariate rational function `num/den` over Q, gcd-reduced with a monic
/// denominator.
///
/// Constants carry no variable, so they combine with functions of any
/// variable. Combining two non-constant functions in different variables
/// panics.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    var: Option<Var>,
    num: UPoly,
    den: UPoly,
}

/// Reduce `n/d` to lowest terms with a monic denominator.
pub fn ratfunc_simplify(var: Var, n: &UPoly, d: &UPoly) -> Result<RatFunc, CoreError> {
    if d.is_zero() {
        return Err(CoreError::DivisionByZero);
    }
    Ok(RatFunc::reduced(Some(var), n.clone(), d.clone()))
}

impl RatFunc {
    fn reduced(var: Option<Var>, n: UPoly, d: UPoly) -> RatFunc {
        if n.is_zero() {
            return RatFunc { var: None, num: UPoly::zero(), den: UPoly::one() };
        }
        let g = n.gcd(&d);
        let (n, _) = n.divrem(&g);
        let (d, _) = d.divrem(&g);
        let li = d.lead().inv().unwrap();
        let (n, d) = (n.scale(&li), d.scale(&li));
        let var = if n.degree() == Some(0) && d.degree() == Some(0) { None } else { var };
        RatFunc { var, num: n, den: d }
    }

    /// The variable itself.
    pub fn var(v: Var) -> RatFunc {
        RatFunc { var: Some(v), num: UPoly::x(), den: UPoly::one() }
    }

    pub fn constant(c: Rational) -> RatFunc {
        RatFunc::reduced(None, UPoly::constant(c), UPoly::one())
    }

    pub fn poly(v: Var, p: UPoly) -> RatFunc {
        RatFunc::reduced(Some(v), p, UPoly::one())
    }

    pub fn numer(&self) -> &UPoly {
        &self.num
    }

    pub fn denom(&self) -> &UPoly {
        &self.den
    }

    pub fn variable(&self) -> Option<Var> {
        self.var
    }

    fn join(a: Option<Var>, b: Option<Var>) -> Option<Var> {
        match (a, b) {
            (Some(x), Some(y)) => {
                assert_eq!(x, y, "rational functions in different variables");
                Some(x)
            }
            (x, None) => x,
            (None, y) => y,
        }
    }

    /// Evaluate at a scalar; `None` if the denominator vanishes there.
    pub fn eval<F: Field>(&self, x: &F) -> Option<F> {
        self.num.eval(x).div(&self.den.eval(x))
    }

    pub fn from_json(v: &serde_json::Value) -> Result<RatFunc, CoreError> {
        let o = match v.as_object() {
            Some(o) => o,
            None => return Ok(RatFunc::constant(rational_from_json(v)?)),
        };
        let var = Var::parse(o.get("var").and_then(|x| x.as_str()).unwrap_or("t"))?;
        let list = |k: &str| -> Result<UPoly, CoreError> {
            let a = o
                .get(k)
                .and_then(|x| x.as_array())
                .ok_or_else(|| CoreError::Parse(format!("ratfunc: missing {k}")))?;
            Ok(UPoly::new(a.iter().map(rational_from_json).collect::<Result<_, _>>()?))
        };
        ratfunc_simplify(var, &list("num")?, &list("den")?)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.var.map(Var::name).unwrap_or("t");
        if self.den == UPoly::one() {
            write!(f, "{}", self.num.fmt_in(v))
        } else {
            write!(f, "({})/({})", self.num.fmt_in(v), self.den.fmt_in(v))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn add(self, o: &'a RatFunc) -> RatFunc {
        let var = RatFunc::join(self.var, o.var);
        if self.den == o.den {
            return RatFunc::reduced(var, self.num.add(&o.num), self.den);
        }
        let n = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        RatFunc::reduced(var, n, self.den.mul(&o.den))
    }
}

impl<'a> Sub<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &'a RatFunc) -> RatFunc {
        self + &(-o.clone())
    }
}

impl<'a> Mul<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &'a RatFunc) -> RatFunc {
        let var = RatFunc::join(self.var, o.var);
        RatFunc::reduced(var, self.num.mul(&o.num), self.den.mul(&o.den))
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, o: RatFunc) -> RatFunc {
        self + &o
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: RatFunc) -> RatFunc {
        self - &o
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: RatFunc) -> RatFunc {
        self * &o
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { var: self.var, num: self.num.neg(), den: self.den }
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::constant(Rational::zero())
    }
    fn one() -> Self {
        RatFunc::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFunc::reduced(self.var, self.den.clone(), self.num.clone()))
        }
    }
    fn from_rational(r: &Rational) -> Self {
        RatFunc::constant(r.clone())
    }
    fn from_json(v: &serde_json::Value) -> Result<Self, CoreError> {
        RatFunc::from_json(v)
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "var": self.var.map(Var::name).unwrap_or("t"),
            "num": self.num.to_json(),
            "den": self.den.to_json(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> UPoly {
        UPoly::from_i64s(cs)
    }

    #[test]
    fn simplify_examples() {
        let a = ratfunc_simplify(Var::T, &p(&[1, 0, 0, -1]), &p(&[1, -1])).unwrap();
        assert_eq!(a, RatFunc::poly(Var::T, p(&[1, 1, 1])));
        let b = ratfunc_simplify(Var::T, &p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap();
        assert_eq!(b, RatFunc::poly(Var::T, p(&[1, 1])));
        let c = ratfunc_simplify(Var::T, &p(&[1, 0, 0, 0, -1]), &p(&[1, -1]).mul(&p(&[1, 0, -1])))
            .unwrap();
        // (1 - t^4) / ((1 - t)(1 - t^2)) = (1 + t^2)/(1 - t), monic form -(1 + t^2)/(t - 1)
        assert_eq!(c.numer(), &p(&[-1, 0, -1]));
        assert_eq!(c.denom(), &p(&[-1, 1]));
        assert_eq!(
            ratfunc_simplify(Var::T, &p(&[1]), &UPoly::zero()),
            Err(CoreError::DivisionByZero)
        );
    }

    #[test]
    fn denominator_is_monic() {
        let a = ratfunc_simplify(Var::Q, &p(&[3]), &p(&[4, 2])).unwrap();
        assert_eq!(a.denom(), &p(&[2, 1]));
        assert_eq!(a.numer(), &UPoly::from_i64s(&[0]).add(&UPoly::constant(Rational::new(3, 2))));
    }
}
