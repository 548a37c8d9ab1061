use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;

use crate::error::CoreError;
use crate::field::Field;
use crate::rational::{rational_from_json, Rational};
use crate::upoly::UPoly;

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<UPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<UPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `l`-th cyclotomic polynomial, computed as `(x^l − 1)/∏_{d|l, d<l} Φ_d`
/// and cached per order.
pub fn cyclotomic_polynomial(l: u32) -> Arc<UPoly> {
    assert!(l >= 1, "cyclotomic order must be positive");
    if let Some(p) = phi_cache().lock().unwrap().get(&l) {
        return p.clone();
    }
    let mut num = UPoly::monomial(Rational::one(), l as usize).sub(&UPoly::one());
    for d in 1..l {
        if l % d == 0 {
            let (q, r) = num.divrem(&cyclotomic_polynomial(d));
            debug_assert!(r.is_zero());
            num = q;
        }
    }
    let p = Arc::new(num);
    phi_cache().lock().unwrap().insert(l, p.clone());
    p
}

/// Euler's totient, the degree of Φ_l.
pub fn totient(l: u32) -> usize {
    (1..=l).filter(|k| k.gcd(&l) == 1).count()
}

/// An element of Q(ζ_l) in the power basis `1, ζ, …, ζ^{φ(l)−1}`, reduced
/// modulo Φ_l.
///
/// Elements of different orders combine in Q(ζ_L) with `L = lcm`, using
/// `ζ_a = ζ_L^{L/a}`. Order 1 is the rationals.
#[derive(Clone)]
pub struct Cyclo {
    l: u32,
    coeffs: Vec<Rational>,
}

/// Reduce a raw power-basis vector `Σ raw[k] ζ_l^k` modulo Φ_l.
pub fn cyclo_normalize(raw: &[Rational], l: u32) -> Cyclo {
    Cyclo::from_upoly(&UPoly::new(raw.to_vec()), l)
}

impl Cyclo {
    fn from_upoly(p: &UPoly, l: u32) -> Cyclo {
        let phi = cyclotomic_polynomial(l);
        let r = p.divrem(&phi).1;
        let deg = phi.degree().unwrap();
        let coeffs = (0..deg).map(|k| r.coeff(k)).collect();
        Cyclo { l, coeffs }
    }

    fn as_upoly(&self) -> UPoly {
        UPoly::new(self.coeffs.clone())
    }

    pub fn rational(r: Rational) -> Cyclo {
        Cyclo { l: 1, coeffs: vec![r] }
    }

    /// The primitive root ζ_l = e^{2πi/l}.
    pub fn zeta(l: u32) -> Cyclo {
        Cyclo::zeta_pow(l, 1)
    }

    /// ζ_l^k for any integer k.
    pub fn zeta_pow(l: u32, k: i64) -> Cyclo {
        let e = k.rem_euclid(l as i64) as usize;
        Cyclo::from_upoly(&UPoly::monomial(Rational::one(), e), l)
    }

    pub fn order(&self) -> u32 {
        self.l
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Image in Q(ζ_big) where `self.order()` divides `big`.
    pub fn embed(&self, big: u32) -> Cyclo {
        if big == self.l {
            return self.clone();
        }
        assert!(big % self.l == 0, "cannot embed Q(ζ_{}) into Q(ζ_{big})", self.l);
        Cyclo::from_upoly(&self.as_upoly().inflate((big / self.l) as usize), big)
    }

    fn align(a: &Cyclo, b: &Cyclo) -> (Cyclo, Cyclo, u32) {
        if a.l == b.l {
            return (a.clone(), b.clone(), a.l);
        }
        let big = a.l.lcm(&b.l);
        (a.embed(big), b.embed(big), big)
    }

    /// The rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Cyclo, CoreError> {
        if let Some(o) = v.as_object() {
            let l = o
                .get("l")
                .and_then(|x| x.as_u64())
                .ok_or_else(|| CoreError::Parse("cyclo: missing l".into()))? as u32;
            if l == 0 {
                return Err(CoreError::Parse("cyclo: l must be positive".into()));
            }
            let cs = o
                .get("coeffs")
                .and_then(|x| x.as_array())
                .ok_or_else(|| CoreError::Parse("cyclo: missing coeffs".into()))?;
            let raw = cs.iter().map(rational_from_json).collect::<Result<Vec<_>, _>>()?;
            Ok(cyclo_normalize(&raw, l))
        } else {
            Ok(Cyclo::rational(rational_from_json(v)?))
        }
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, o: &Cyclo) -> bool {
        let (a, b, _) = Cyclo::align(self, o);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclo {}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        write!(f, "{}", self.as_upoly().fmt_in(&format!("z{}", self.l)))
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a Cyclo> for Cyclo {
    type Output = Cyclo;
    fn add(self, o: &'a Cyclo) -> Cyclo {
        let (a, b, l) = Cyclo::align(&self, o);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Cyclo { l, coeffs }
    }
}

impl<'a> Sub<&'a Cyclo> for Cyclo {
    type Output = Cyclo;
    fn sub(self, o: &'a Cyclo) -> Cyclo {
        let (a, b, l) = Cyclo::align(&self, o);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        Cyclo { l, coeffs }
    }
}

impl<'a> Mul<&'a Cyclo> for Cyclo {
    type Output = Cyclo;
    fn mul(self, o: &'a Cyclo) -> Cyclo {
        if self.l == 1 {
            let s = &self.coeffs[0];
            return Cyclo { l: o.l, coeffs: o.coeffs.iter().map(|c| c * s).collect() };
        }
        if o.l == 1 {
            let s = &o.coeffs[0];
            return Cyclo { l: self.l, coeffs: self.coeffs.iter().map(|c| c * s).collect() };
        }
        let (a, b, l) = Cyclo::align(&self, o);
        Cyclo::from_upoly(&a.as_upoly().mul(&b.as_upoly()), l)
    }
}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(self, o: Cyclo) -> Cyclo {
        self + &o
    }
}

impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(self, o: Cyclo) -> Cyclo {
        self - &o
    }
}

impl Mul for Cyclo {
    type Output = Cyclo;
    fn mul(self, o: Cyclo) -> Cyclo {
        self * &o
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { l: self.l, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Field for Cyclo {
    fn zero() -> Self {
        Cyclo::rational(Rational::zero())
    }
    fn one() -> Self {
        Cyclo::rational(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.l == 1 {
            return self.coeffs[0].inv().map(Cyclo::rational);
        }
        let phi = cyclotomic_polynomial(self.l);
        let (g, s, _) = self.as_upoly().gcdext(&phi);
        debug_assert!(g == UPoly::one());
        Some(Cyclo::from_upoly(&s, self.l))
    }
    fn from_rational(r: &Rational) -> Self {
        Cyclo::rational(r.clone())
    }
    fn from_json(v: &serde_json::Value) -> Result<Self, CoreError> {
        Cyclo::from_json(v)
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "l": self.l,
            "coeffs": self.coeffs.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(cyclo_normalize(&[r(3), r(5)], 2), Cyclo::rational(r(-2)));
        assert_eq!(cyclo_normalize(&[r(0), r(0), r(1), r(0)], 4), Cyclo::rational(r(-1)));
        assert!(cyclo_normalize(&[r(1), r(1), r(1)], 3).is_zero());
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), UPoly::from_i64s(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(6), UPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(12), UPoly::from_i64s(&[1, 0, -1, 0, 1]));
        assert_eq!(totient(12), 4);
    }

    #[test]
    fn zeta_power_is_one() {
        for l in 1..=12u32 {
            let z = Cyclo::zeta(l);
            assert!(z.pow(l as i64).unwrap().is_one(), "l = {l}");
            assert!(cyclotomic_polynomial(l).eval(&z).is_zero());
        }
    }

    #[test]
    fn mixed_orders() {
        // ζ_4^2 = ζ_2 = -1, ζ_6^2 = ζ_3
        assert_eq!(Cyclo::zeta(4).pow(2).unwrap(), Cyclo::zeta(2));
        assert_eq!(Cyclo::zeta(6).pow(2).unwrap(), Cyclo::zeta(3));
        let s = Cyclo::zeta(2) + &Cyclo::zeta(3);
        assert_eq!(s.order(), 6);
        assert_eq!(s - &Cyclo::zeta(3), Cyclo::rational(r(-1)));
    }

    #[test]
    fn inverse() {
        let a = Cyclo::zeta(5) + &Cyclo::rational(r(2));
        let ai = a.inv().unwrap();
        assert!((a * &ai).is_one());
    }
}
