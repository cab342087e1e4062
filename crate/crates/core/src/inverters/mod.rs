//! Numerical inverse Laplace transform algorithms.
//!
//! Every inverter takes a [`Transform`] (anything that evaluates `F(s)` at a
//! complex point), a time `t > 0` and a [`PrecisionContext`], and returns
//! `f(t)` rounded to that context.

mod fourier;
mod gaver;
mod stehfest;
mod talbot;

use std::fmt;
use std::str::FromStr;

use rug::Rational;

pub use fourier::{fourier_invert, fourier_invert_with, FourierDamping};
pub use gaver::{gaver_functional, salzer_gaver_invert, salzer_weights};
pub use stehfest::{stehfest_invert, stehfest_weights, Stehfest, StehfestWeights};
pub use talbot::{talbot_invert, talbot_map, talbot_map_deriv, talbot_nodes, talbot_sum};

use crate::error::{Error, Result};
use crate::numkernel::{Complex, PrecisionContext, Real};

/// A Laplace-domain function `F(s)`.
///
/// Evaluation takes `&mut self` so that stateful wrappers (seeded noise) can
/// advance their stream on each call.
pub trait Transform {
    fn eval(&mut self, s: &Complex, ctx: &PrecisionContext) -> Result<Complex>;
}

impl<F> Transform for F
where
    F: FnMut(&Complex, &PrecisionContext) -> Result<Complex>,
{
    fn eval(&mut self, s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
        self(s, ctx)
    }
}

/// `F` at a real point, keeping only the real part.
pub(crate) fn eval_real<F: Transform + ?Sized>(
    f: &mut F,
    s: &Real,
    ctx: &PrecisionContext,
) -> Result<Real> {
    Ok(f.eval(&Complex::from_real(s.clone()), ctx)?.re)
}

pub(crate) fn check_time(t: &Real) -> Result<()> {
    if t.is_zero() || t.is_sign_negative() || !t.is_finite() {
        return Err(Error::param(format!(
            "t must be positive, got {}",
            t.to_f64()
        )));
    }
    Ok(())
}

/// Decimal digits lost to cancellation when a sum is weighted by
/// coefficients whose magnitudes add up to `weight_mass`, plus a margin.
pub(crate) fn guard_digits(weight_mass: &Rational) -> u32 {
    let bits = weight_mass.numer().significant_bits() as i64
        - weight_mass.denom().significant_bits() as i64
        + 1;
    let digits = (bits.max(0) as f64 * std::f64::consts::LOG10_2).ceil() as u32;
    digits + 3
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Stehfest,
    Gaver,
    SalzerGaver,
    Fourier,
    Talbot,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Stehfest,
        Method::Gaver,
        Method::SalzerGaver,
        Method::Fourier,
        Method::Talbot,
    ];

    /// The three methods compared in the benchmark tables, in table order.
    pub const TABLE: [Method; 3] = [Method::Stehfest, Method::Talbot, Method::Fourier];

    pub fn name(self) -> &'static str {
        match self {
            Method::Stehfest => "stehfest",
            Method::Gaver => "gaver",
            Method::SalzerGaver => "salzer_gaver",
            Method::Fourier => "fourier",
            Method::Talbot => "talbot",
        }
    }

    pub fn display_name(self) -> &'static str {
        match self {
            Method::Stehfest => "Stehfest",
            Method::Gaver => "Gaver",
            Method::SalzerGaver => "Salzer-Gaver",
            Method::Fourier => "Fourier",
            Method::Talbot => "Talbot",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                Error::param(format!(
                    "unknown method {s:?}; expected one of stehfest, gaver, salzer_gaver, fourier, talbot"
                ))
            })
    }
}

/// Parameters for one inversion method.
///
/// `terms` means: Stehfest weight count N (even), Gaver order n, Salzer–Gaver
/// order n, Fourier series terms, or Talbot node count n (odd).
#[derive(Clone, Debug, PartialEq)]
pub struct MethodConfig {
    pub method: Method,
    pub terms: u32,
    pub digits: u32,
    pub fourier_a: f64,
    pub fourier_damping: FourierDamping,
    /// Multiplies the Talbot contour; 1 is the fixed contour.
    pub contour_scale: f64,
    pub notes: String,
}

impl MethodConfig {
    pub const DEFAULT_FOURIER_A: f64 = 4.0;

    /// Config with the default precision policy for `terms`.
    pub fn new(method: Method, terms: u32) -> Result<Self> {
        let cfg = MethodConfig {
            method,
            terms,
            digits: Self::default_digits(method, terms),
            fourier_a: Self::DEFAULT_FOURIER_A,
            fourier_damping: FourierDamping::default(),
            contour_scale: 1.0,
            notes: String::new(),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_digits(mut self, digits: u32) -> Self {
        self.digits = digits;
        self
    }

    /// 1.8 digits per Stehfest weight, 2 per Fourier/Talbot term, never
    /// below double precision. Gaver order n uses 2n transform values and
    /// Salzer–Gaver order n matches Stehfest with 2n+2 weights.
    pub fn default_digits(method: Method, terms: u32) -> u32 {
        let stehfest = |n: u32| (18 * n).div_ceil(10);
        let d = match method {
            Method::Stehfest => stehfest(terms),
            Method::Gaver => stehfest(2 * terms),
            Method::SalzerGaver => stehfest(2 * terms + 2),
            Method::Fourier | Method::Talbot => 2 * terms,
        };
        d.max(PrecisionContext::MIN_DIGITS)
    }

    pub fn validate(&self) -> Result<()> {
        match self.method {
            Method::Stehfest => {
                if self.terms == 0 || !self.terms.is_multiple_of(2) {
                    return Err(Error::param(format!(
                        "N must be even and positive for Stehfest, got {}",
                        self.terms
                    )));
                }
            }
            Method::Talbot => {
                if self.terms < 3 || self.terms.is_multiple_of(2) {
                    return Err(Error::param(format!(
                        "n must be odd and at least 3 for Talbot, got {}",
                        self.terms
                    )));
                }
                if !(self.contour_scale.is_finite() && self.contour_scale > 0.0) {
                    return Err(Error::param("contour scale must be positive"));
                }
            }
            Method::Gaver | Method::SalzerGaver => {
                if self.terms == 0 {
                    return Err(Error::param("n must be at least 1"));
                }
            }
            Method::Fourier => {
                if !(self.fourier_a.is_finite() && self.fourier_a > 0.0) {
                    return Err(Error::param("Fourier parameter a must be positive"));
                }
            }
        }
        PrecisionContext::new(self.digits)?;
        Ok(())
    }

    pub fn context(&self) -> Result<PrecisionContext> {
        PrecisionContext::new(self.digits)
    }

    /// Builds a reusable inverter (Stehfest weights are generated once).
    pub fn inverter(&self) -> Result<Inverter> {
        self.validate()?;
        let stehfest = match self.method {
            Method::Stehfest => Some(Stehfest::new(self.terms)?),
            _ => None,
        };
        Ok(Inverter {
            config: self.clone(),
            stehfest,
        })
    }
}

/// A validated [`MethodConfig`] ready to invert many points.
#[derive(Clone, Debug)]
pub struct Inverter {
    config: MethodConfig,
    stehfest: Option<Stehfest>,
}

impl Inverter {
    pub fn config(&self) -> &MethodConfig {
        &self.config
    }

    pub fn invert<F: Transform + ?Sized>(
        &self,
        f: &mut F,
        t: &Real,
        ctx: &PrecisionContext,
    ) -> Result<Real> {
        let cfg = &self.config;
        match cfg.method {
            Method::Stehfest => self
                .stehfest
                .as_ref()
                .expect("stehfest weights built in MethodConfig::inverter")
                .invert(f, t, ctx),
            Method::Gaver => gaver_functional(f, t, cfg.terms, ctx),
            Method::SalzerGaver => salzer_gaver_invert(f, t, cfg.terms, ctx),
            Method::Fourier => {
                let a = Real::from_f64(cfg.fourier_a, ctx);
                fourier_invert_with(f, t, cfg.terms, &a, cfg.fourier_damping, ctx)
            }
            Method::Talbot => {
                let scale = Real::from_f64(cfg.contour_scale, ctx);
                Ok(talbot_sum(f, t, cfg.terms, &scale, ctx)?.re)
            }
        }
    }
}
