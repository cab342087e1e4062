//! Seeded additive noise on transform samples.
//!
//! A noisy evaluator returns `F(s) + delta u` where `u` is drawn uniformly
//! from `[0, 1)` on every call. The stream is a SplitMix64 generator seeded
//! from a run seed and a text label, so two evaluators with the same seed and
//! label produce identical perturbations regardless of thread scheduling.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::inverters::Transform;
use crate::numkernel::{Complex, PrecisionContext, Real};

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;
const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// 64-bit FNV-1a hash.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    bytes
        .iter()
        .fold(FNV_OFFSET, |h, &b| (h ^ b as u64).wrapping_mul(FNV_PRIME))
}

/// SplitMix64 output mix.
pub fn splitmix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform `[0, 1)` stream.
#[derive(Clone, Debug)]
pub struct NoiseStream {
    state: u64,
}

impl NoiseStream {
    pub fn new(seed: u64, label: &str) -> Self {
        NoiseStream {
            state: splitmix64(seed ^ fnv1a64(label.as_bytes())),
        }
    }

    pub fn from_state(state: u64) -> Self {
        NoiseStream { state }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        splitmix64(self.state)
    }

    /// 53 random bits scaled to `[0, 1)`.
    pub fn next_uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NoiseMode {
    /// `F + delta u` with one draw per call.
    #[default]
    RealOnly,
    /// `F + delta u1 + i delta u2` with two draws per call.
    IndependentComplex,
}

impl NoiseMode {
    pub fn name(self) -> &'static str {
        match self {
            NoiseMode::RealOnly => "real",
            NoiseMode::IndependentComplex => "complex",
        }
    }
}

impl FromStr for NoiseMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "real" => Ok(NoiseMode::RealOnly),
            "complex" => Ok(NoiseMode::IndependentComplex),
            other => Err(Error::param(format!(
                "unknown noise mode {other:?}; expected real or complex"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NoiseSpec {
    pub delta: f64,
    pub seed: u64,
    pub mode: NoiseMode,
    pub label: String,
}

impl NoiseSpec {
    pub const DEFAULT_DELTA: f64 = 1e-3;

    pub fn new(delta: f64, seed: u64, label: impl Into<String>) -> Result<Self> {
        if !(delta.is_finite() && delta >= 0.0) {
            return Err(Error::param(format!(
                "noise level must be finite and non-negative, got {delta}"
            )));
        }
        Ok(NoiseSpec {
            delta,
            seed,
            mode: NoiseMode::default(),
            label: label.into(),
        })
    }

    pub fn with_mode(mut self, mode: NoiseMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn stream(&self) -> NoiseStream {
        NoiseStream::new(self.seed, &self.label)
    }
}

/// A transform whose values are perturbed on every evaluation.
pub struct Noisy<F> {
    inner: F,
    delta: f64,
    mode: NoiseMode,
    stream: NoiseStream,
}

impl<F> Noisy<F> {
    pub fn into_inner(self) -> F {
        self.inner
    }
}

impl<F: Transform> Transform for Noisy<F> {
    fn eval(&mut self, s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
        let value = self.inner.eval(s, ctx)?;
        let u1 = self.stream.next_uniform();
        if self.delta == 0.0 {
            if self.mode == NoiseMode::IndependentComplex {
                self.stream.next_uniform();
            }
            return Ok(value);
        }
        let re = Real::from_f64(self.delta * u1, ctx);
        let shift = match self.mode {
            NoiseMode::RealOnly => Complex::new(re, Real::zero(ctx)),
            NoiseMode::IndependentComplex => {
                let u2 = self.stream.next_uniform();
                Complex::new(re, Real::from_f64(self.delta * u2, ctx))
            }
        };
        Ok(value + shift)
    }
}

/// Wraps `f` so each call adds a fresh noise draw to its value.
pub fn perturb_evaluator<F: Transform>(f: F, spec: &NoiseSpec) -> Noisy<F> {
    Noisy {
        inner: f,
        delta: spec.delta,
        mode: spec.mode,
        stream: spec.stream(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hash_and_mix_vectors() {
        assert_eq!(fnv1a64(b""), 0xcbf29ce484222325);
        assert_eq!(fnv1a64(b"a"), 0xaf63dc4c8601ec8c);
        assert_eq!(fnv1a64(b"foobar"), 0x85944171f73967e8);
        assert_eq!(NoiseStream::from_state(0).next_u64(), 0xE220A8397B1DCDAF);
    }

    #[test]
    fn uniform_range_and_mean() {
        let mut st = NoiseStream::new(42, "mean");
        let n = 100_000;
        let mut sum = 0.0;
        for _ in 0..n {
            let u = st.next_uniform();
            assert!((0.0..1.0).contains(&u));
            sum += u;
        }
        let mean = sum / n as f64;
        assert!((0.495..=0.505).contains(&mean), "mean {mean}");
    }

    #[test]
    fn streams_depend_on_seed_and_label() {
        let a: Vec<u64> = (0..4)
            .map({
                let mut s = NoiseStream::new(7, "x");
                move |_| s.next_u64()
            })
            .collect();
        let mut again = NoiseStream::new(7, "x");
        assert!(a.iter().all(|&v| v == again.next_u64()));
        assert_ne!(NoiseStream::new(7, "y").next_u64(), a[0]);
        assert_ne!(NoiseStream::new(8, "x").next_u64(), a[0]);
    }

    fn one(_: &Complex, c: &PrecisionContext) -> Result<Complex> {
        Ok(Complex::one(c))
    }

    #[test]
    fn perturbation_is_bounded_and_fresh_per_call() {
        let ctx = PrecisionContext::new(30).unwrap();
        let s = Complex::from_f64(0.4, -2.0, &ctx);
        let delta = 1e-3;
        for mode in [NoiseMode::RealOnly, NoiseMode::IndependentComplex] {
            let spec = NoiseSpec::new(delta, 42, "bound").unwrap().with_mode(mode);
            let mut f = perturb_evaluator(one, &spec);
            let mut seen = Vec::new();
            for _ in 0..200 {
                let v = f.eval(&s, &ctx).unwrap();
                let dev = (v.clone() - Complex::one(&ctx)).abs().to_f64();
                let bound = match mode {
                    NoiseMode::RealOnly => delta,
                    NoiseMode::IndependentComplex => delta * 2f64.sqrt(),
                };
                assert!(dev <= bound * (1.0 + 1e-12));
                if mode == NoiseMode::RealOnly {
                    assert!(v.im.is_zero());
                }
                seen.push(v.re.to_f64());
            }
            seen.dedup();
            assert!(seen.len() > 190, "values repeat at the same s");
        }
    }

    #[test]
    fn zero_delta_is_identity() {
        let ctx = PrecisionContext::new(30).unwrap();
        let spec = NoiseSpec::new(0.0, 1, "id").unwrap();
        let mut f = perturb_evaluator(|s: &Complex, _: &PrecisionContext| Ok(s.sqr()), &spec);
        let s = Complex::from_f64(0.3, 1.7, &ctx);
        assert_eq!(f.eval(&s, &ctx).unwrap(), s.sqr());
        assert!(NoiseSpec::new(-1.0, 0, "").is_err());
        assert!(NoiseSpec::new(f64::NAN, 0, "").is_err());
    }

    #[test]
    fn same_spec_same_values() {
        let ctx = PrecisionContext::new(20).unwrap();
        let spec = NoiseSpec::new(1e-2, 9, "case1/talbot/noisy").unwrap();
        let s = Complex::one(&ctx);
        let mut a = perturb_evaluator(one, &spec);
        let mut b = perturb_evaluator(one, &spec);
        for _ in 0..10 {
            assert_eq!(a.eval(&s, &ctx).unwrap(), b.eval(&s, &ctx).unwrap());
        }
    }
}
