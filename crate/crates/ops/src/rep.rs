//! Representation contexts: a family, a rank, a level and parameter values.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use cyclodaha_core::sampling::QBase;
use cyclodaha_core::{sample_generic, Constraint, Cyclo, Field, Rational, SampleSpec};

use crate::coef::{Coef, Param};
use crate::error::OpsError;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    Daha,
    DegDaha,
    CycRat,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Daha => "DAHA",
            Family::DegDaha => "DEG_DAHA",
            Family::CycRat => "CYC_RAT_CHEREDNIK",
        })
    }
}

/// A representation on Laurent polynomials in `n` variables over `F`.
///
/// Parameters in `pinned` keep their value when [`Rep::resampled`] draws
/// fresh generic values for the others.
#[derive(Clone, Debug)]
pub struct Rep<F> {
    family: Family,
    n: usize,
    l: usize,
    params: BTreeMap<Param, F>,
    pinned: BTreeSet<Param>,
}

fn r<F: Field>(x: &Rational) -> F {
    F::from_rational(x)
}

impl<F: Field> Rep<F> {
    /// DAHA polynomial representation with parameters `q`, `𝐭` and `Z_1..Z_l`.
    pub fn daha(n: usize, q: F, tt: F, z: Vec<F>) -> Self {
        let mut params = BTreeMap::new();
        params.insert(Param::Q, q);
        params.insert(Param::Tt, tt);
        let l = z.len();
        for (i, v) in z.into_iter().enumerate() {
            params.insert(Param::Z(i + 1), v);
        }
        Rep { family: Family::Daha, n, l, params, pinned: BTreeSet::new() }
    }

    /// Degenerate DAHA representation with `ħ`, `k` and `z_1..z_l`.
    pub fn deg(n: usize, hbar: F, k: F, z: Vec<F>) -> Self {
        let mut params = BTreeMap::new();
        params.insert(Param::Hbar, hbar);
        params.insert(Param::K, k);
        let l = z.len();
        for (i, v) in z.into_iter().enumerate() {
            params.insert(Param::Zlow(i + 1), v);
        }
        Rep { family: Family::DegDaha, n, l, params, pinned: BTreeSet::new() }
    }

    pub fn family(&self) -> Family {
        self.family
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn l(&self) -> usize {
        self.l
    }
    pub fn params(&self) -> &BTreeMap<Param, F> {
        &self.params
    }

    pub fn get(&self, p: Param) -> Result<&F, OpsError> {
        self.params.get(&p).ok_or_else(|| OpsError::MissingParam(p.to_string()))
    }

    /// Set a parameter value and keep it fixed under resampling.
    pub fn pin(mut self, p: Param, v: F) -> Self {
        self.params.insert(p, v);
        self.pinned.insert(p);
        self
    }

    pub fn with_param(mut self, p: Param, v: F) -> Self {
        self.params.insert(p, v);
        self
    }

    pub fn is_pinned(&self, p: Param) -> bool {
        self.pinned.contains(&p)
    }

    /// Evaluate a coefficient at this representation's parameters.
    pub fn eval(&self, c: &Coef) -> Result<F, OpsError> {
        c.eval(&|p| self.params.get(&p).cloned())
    }

    /// `𝐭`, `𝐭⁻¹` and `𝐭 − 𝐭⁻¹`.
    pub(crate) fn tt_data(&self) -> Result<(F, F, F), OpsError> {
        let tt = self.get(Param::Tt)?.clone();
        let ti = tt.inv().ok_or(OpsError::SingularCoefficient)?;
        let d = tt.clone() - &ti;
        Ok((tt, ti, d))
    }

    /// A copy with every unpinned parameter redrawn generically from `seed`.
    ///
    /// `q`, `𝐭` avoid roots of unity up to order 24, ratios `Z_i/Z_j` avoid
    /// powers of `t` and `q` in a window of 6, and the degenerate `z_i` avoid
    /// integer differences.
    pub fn resampled(&self, seed: u64) -> Result<Self, OpsError> {
        let free: Vec<Param> = self
            .params
            .keys()
            .copied()
            .filter(|p| !self.pinned.contains(p) && *p != Param::Zeta)
            .collect();
        let idx = |p: Param| free.iter().position(|x| *x == p);
        let mut spec = SampleSpec::new(free.len()).all_nonzero();
        for (v, p) in free.iter().enumerate() {
            if matches!(p, Param::Q | Param::Tt) {
                spec = spec.with(Constraint::NotRootOfUnity { var: v, max_order: 24 });
            }
        }
        let fixed_rational = |p: Param| self.params.get(&p).and_then(rational_value);
        for (a, pa) in free.iter().enumerate() {
            for (b, pb) in free.iter().enumerate().skip(a + 1) {
                match (pa, pb) {
                    (Param::Z(_), Param::Z(_)) => {
                        for base in [Param::Tt, Param::Q] {
                            let q = match idx(base) {
                                Some(v) => QBase::Var(v),
                                None => match fixed_rational(base) {
                                    Some(x) => QBase::Fixed(x),
                                    None => continue,
                                },
                            };
                            spec = spec.with(Constraint::RatiosNotQPower { i: a, j: b, q, window: 6 });
                        }
                    }
                    (Param::Zlow(_), Param::Zlow(_)) => {
                        spec = spec.with(Constraint::DifferencesNotInteger { i: a, j: b, window: 12 });
                    }
                    _ => {}
                }
            }
        }
        spec.signed = self.family != Family::Daha;
        let vals = sample_generic(&spec, seed)?;
        let mut out = self.clone();
        for (p, v) in free.iter().zip(vals) {
            out.params.insert(*p, r(&v));
        }
        Ok(out)
    }

    /// Parameters rendered for reports.
    pub fn params_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        for (p, v) in &self.params {
            m.insert(p.to_string(), v.to_json());
        }
        serde_json::Value::Object(m)
    }
}

fn rational_value<F: Field>(v: &F) -> Option<Rational> {
    Rational::from_json(&v.to_json()).ok()
}

impl Rep<Cyclo> {
    /// Cyclotomic rational Cherednik representation over `Q(ζ_l)` with
    /// `c_0..c_{l−1}`, `ħ` and `k`.
    pub fn cyc_rat(n: usize, l: usize, hbar: Cyclo, k: Cyclo, c: Vec<Cyclo>) -> Self {
        assert_eq!(c.len(), l, "one c_j per j in 0..l");
        let mut params = BTreeMap::new();
        params.insert(Param::Hbar, hbar);
        params.insert(Param::K, k);
        for (j, v) in c.into_iter().enumerate() {
            params.insert(Param::C(j), v);
        }
        params.insert(Param::Zeta, Cyclo::zeta(l as u32));
        let mut pinned = BTreeSet::new();
        pinned.insert(Param::Zeta);
        Rep { family: Family::CycRat, n, l, params, pinned }
    }
}
