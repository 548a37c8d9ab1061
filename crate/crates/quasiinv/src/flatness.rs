//! Flatness protocols: graded dimensions of a deformed space at sampled
//! parameters against the undeformed space computed by the same engine.

use serde_json::{json, Value};

use cyclodaha_core::sampling::{sample_generic, Constraint, SampleSpec};
use cyclodaha_core::{Field, Rational};

use crate::basis::graded_basis;
use crate::error::QuasiError;
use crate::spec::QuasiSpec;

#[derive(Clone, Debug)]
pub struct FlatnessReport {
    pub reference: QuasiSpec,
    pub reference_dims: Vec<usize>,
    /// `(seed, sampled parameter, dims)` per deformed sample.
    pub samples: Vec<(u64, Rational, Vec<usize>)>,
}

impl FlatnessReport {
    pub fn pass(&self) -> bool {
        self.samples.iter().all(|(_, _, d)| *d == self.reference_dims)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "reference": self.reference.to_json(),
            "reference_dims": self.reference_dims,
            "samples": self.samples.iter().map(|(s, q, d)| json!({"seed": s, "q": q.to_string(), "dims": d, "match": *d == self.reference_dims})).collect::<Vec<_>>(),
            "status": if self.pass() { "pass" } else { "fail" },
        })
    }
}

/// A positive rational that is not a root of unity, drawn from `seed`.
pub fn sample_deformation(seed: u64) -> Result<Rational, QuasiError> {
    let mut s = SampleSpec::new(1).with(Constraint::NotRootOfUnity { var: 0, max_order: 24 });
    s.prime_bound = 13;
    Ok(sample_generic(&s, seed)?.remove(0))
}

/// Compare `reference` (which must be classical) with `reference` at the
/// deformation parameter sampled from each seed.
pub fn flatness(reference: &QuasiSpec, maxdeg: usize, seeds: &[u64]) -> Result<FlatnessReport, QuasiError> {
    if !reference.is_classical() {
        return Err(QuasiError::BadSpec("the reference space must be the q = 1 one".into()));
    }
    let reference_dims = graded_basis::<Rational>(reference, maxdeg)?.dims();
    let mut samples = Vec::new();
    for &seed in seeds {
        let q = sample_deformation(seed)?;
        let mut spec = reference.clone();
        spec.q = q.clone();
        if spec.variant == crate::spec::Variant::Twisted {
            spec.variant = crate::spec::Variant::TwistedQ;
        }
        samples.push((seed, q, graded_basis::<Rational>(&spec, maxdeg)?.dims()));
    }
    Ok(FlatnessReport { reference: reference.clone(), reference_dims, samples })
}

/// `Q_{m,q}` against `Q_m`.
pub fn flatness_plain(n: usize, m: u32, maxdeg: usize, seeds: &[u64]) -> Result<FlatnessReport, QuasiError> {
    flatness(&QuasiSpec::plain_q(n, m, Rational::one()), maxdeg, seeds)
}

/// `Q^l_{m,m_1..,𝐪}` against `𝐪 = 1`. Rational coefficients, so `l ≤ 2`.
pub fn flatness_cyclotomic(n: usize, m: u32, mr: Vec<u32>, maxdeg: usize, seeds: &[u64]) -> Result<FlatnessReport, QuasiError> {
    flatness(&QuasiSpec::cyclotomic(n, m, mr, Rational::one()), maxdeg, seeds)
}

/// `Q_{m,q}(a)` against `Q_m(a)`; the sampled value is the base `𝗊 = q^{1/M}`.
pub fn flatness_twisted_q(m: u32, a: Vec<Rational>, maxdeg: usize, seeds: &[u64]) -> Result<FlatnessReport, QuasiError> {
    flatness(&QuasiSpec::twisted(m, a), maxdeg, seeds)
}
