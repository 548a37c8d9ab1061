use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CoreError;
use crate::field::Field;
use crate::rational::Rational;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic splittable seed source. Children derived with distinct
/// labels are statistically independent and reproducible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeedStream(u64);

impl SeedStream {
    pub fn new(seed: u64) -> Self {
        SeedStream(seed)
    }

    pub fn seed(&self) -> u64 {
        self.0
    }

    pub fn child(&self, label: u64) -> SeedStream {
        SeedStream(splitmix64(self.0 ^ splitmix64(label.wrapping_add(0x5EED))))
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

/// The base of a `ratios-not-q-power` constraint.
#[derive(Clone, Debug)]
pub enum QBase {
    Fixed(Rational),
    Var(usize),
}

/// One excluded-value condition on the sampled tuple (indices into it).
#[derive(Clone, Debug)]
pub enum Constraint {
    NonZero(usize),
    /// `x^k ≠ 1` for `1 ≤ k ≤ max_order`.
    NotRootOfUnity { var: usize, max_order: u32 },
    /// `x_i − x_j` is not an integer of absolute value at most `window`.
    DifferencesNotInteger { i: usize, j: usize, window: i64 },
    /// `x_i / x_j ≠ q^p` for `|p| ≤ window`.
    RatiosNotQPower { i: usize, j: usize, q: QBase, window: i64 },
    /// `x ∉ values`.
    Avoid { var: usize, values: Vec<Rational> },
}

/// Shape and constraints of a generic sample.
#[derive(Clone, Debug)]
pub struct SampleSpec {
    pub nvars: usize,
    pub constraints: Vec<Constraint>,
    pub max_attempts: usize,
    /// Numerators and denominators are drawn from the primes up to this bound.
    pub prime_bound: u64,
    /// Draw a random sign as well.
    pub signed: bool,
}

impl SampleSpec {
    pub fn new(nvars: usize) -> Self {
        SampleSpec { nvars, constraints: Vec::new(), max_attempts: 10_000, prime_bound: 47, signed: false }
    }

    pub fn with(mut self, c: Constraint) -> Self {
        self.constraints.push(c);
        self
    }

    /// Every variable nonzero and pairwise distinct ratios are left to the caller.
    pub fn all_nonzero(mut self) -> Self {
        for v in 0..self.nvars {
            self.constraints.push(Constraint::NonZero(v));
        }
        self
    }
}

fn primes_up_to(b: u64) -> Vec<u64> {
    (2..=b.max(3)).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)).collect()
}

/// Check one constraint on a candidate tuple.
pub fn satisfies(c: &Constraint, x: &[Rational]) -> bool {
    match c {
        Constraint::NonZero(v) => !x[*v].is_zero(),
        Constraint::NotRootOfUnity { var, max_order } => {
            let v = &x[*var];
            (1..=*max_order as i64).all(|k| !v.pow(k).is_some_and(|p| p.is_one()))
        }
        Constraint::DifferencesNotInteger { i, j, window } => {
            let d = &x[*i] - &x[*j];
            !(d.is_integer() && d.abs() <= Rational::from_i64(*window))
        }
        Constraint::RatiosNotQPower { i, j, q, window } => {
            let Some(r) = x[*i].div(&x[*j]) else { return false };
            let q = match q {
                QBase::Fixed(q) => q.clone(),
                QBase::Var(v) => x[*v].clone(),
            };
            (-*window..=*window).all(|p| q.pow(p).map_or(true, |qp| qp != r))
        }
        Constraint::Avoid { var, values } => !values.contains(&x[*var]),
    }
}

/// Draw a tuple of rationals meeting every constraint, deterministically
/// from `seed`.
pub fn sample_generic(spec: &SampleSpec, seed: u64) -> Result<Vec<Rational>, CoreError> {
    let primes = primes_up_to(spec.prime_bound);
    let mut rng = SeedStream::new(seed).rng();
    for _ in 0..spec.max_attempts {
        let x: Vec<Rational> = (0..spec.nvars)
            .map(|_| {
                let n = primes[rng.gen_range(0..primes.len())] as i64;
                let mut d = n;
                while d == n {
                    d = primes[rng.gen_range(0..primes.len())] as i64;
                }
                let s = if spec.signed && rng.gen_bool(0.5) { -1 } else { 1 };
                Rational::new(s * n, d)
            })
            .collect();
        if spec.constraints.iter().all(|c| satisfies(c, &x)) {
            return Ok(x);
        }
    }
    Err(CoreError::SamplingExhausted(spec.max_attempts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_checked() {
        let spec = SampleSpec::new(1)
            .with(Constraint::NonZero(0))
            .with(Constraint::NotRootOfUnity { var: 0, max_order: 24 });
        let a = sample_generic(&spec, 7).unwrap();
        assert_eq!(a, sample_generic(&spec, 7).unwrap());
        assert!(spec.constraints.iter().all(|c| satisfies(c, &a)));
        assert!(!a[0].is_integer());
    }

    #[test]
    fn ratio_window_excludes_thirteen_values() {
        let q = Rational::new(5, 3);
        let spec = SampleSpec::new(2).with(Constraint::RatiosNotQPower {
            i: 0,
            j: 1,
            q: QBase::Fixed(q.clone()),
            window: 6,
        });
        let z = sample_generic(&spec, 3).unwrap();
        let r = z[0].clone() / z[1].clone();
        for p in -6..=6 {
            assert_ne!(r, q.pow(p).unwrap());
        }
        // The checker rejects each of the 13 excluded ratios.
        for p in -6..=6 {
            let bad = vec![q.pow(p).unwrap(), Rational::one()];
            assert!(!satisfies(&spec.constraints[0], &bad));
        }
    }

    #[test]
    fn differences() {
        let spec = SampleSpec::new(2).with(Constraint::DifferencesNotInteger { i: 0, j: 1, window: 10 });
        let z = sample_generic(&spec, 1).unwrap();
        assert!(!(&z[0] - &z[1]).is_integer());
    }

    #[test]
    fn contradictory_constraints_exhaust() {
        let mut spec = SampleSpec::new(1).with(Constraint::Avoid { var: 0, values: vec![] });
        spec.constraints.push(Constraint::RatiosNotQPower { i: 0, j: 0, q: QBase::Fixed(Rational::from_i64(2)), window: 1 });
        spec.max_attempts = 50;
        assert_eq!(sample_generic(&spec, 0), Err(CoreError::SamplingExhausted(50)));
    }
}
