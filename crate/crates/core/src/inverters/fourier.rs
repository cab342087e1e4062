use super::{check_time, eval_real, Transform};
use crate::error::{Error, Result};
use crate::numkernel::{const_pi, Complex, PrecisionContext, Real};

/// How the single Fourier parameter `a` sets the abscissa `u` of the
/// Bromwich line for a given `t`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FourierDamping {
    /// `u = a / t`: the damping factor `e^(ut) = e^a` is the same for every t.
    #[default]
    PerTime,
    /// `u = a / (2t)`, i.e. `a = uT` with half-period `T = 2t`.
    HalfPeriod,
    /// `u = a` regardless of t.
    Fixed,
}

impl FourierDamping {
    pub fn abscissa(self, a: &Real, t: &Real) -> Real {
        match self {
            FourierDamping::PerTime => a / t,
            FourierDamping::HalfPeriod => a / t.mul_i64(2),
            FourierDamping::Fixed => a.clone(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FourierDamping::PerTime => "per-time",
            FourierDamping::HalfPeriod => "half-period",
            FourierDamping::Fixed => "fixed",
        }
    }
}

impl std::str::FromStr for FourierDamping {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "per-time" => Ok(FourierDamping::PerTime),
            "half-period" => Ok(FourierDamping::HalfPeriod),
            "fixed" => Ok(FourierDamping::Fixed),
            other => Err(Error::param(format!(
                "unknown Fourier damping {other:?}; expected per-time, half-period or fixed"
            ))),
        }
    }
}

/// Fourier-series inversion with half-period `T = 2t`:
///
/// `f(t) ~ e^(ut)/t [ F(u)/2 + sum_{k=1}^{N} (-1)^k Re F(u + k pi i / t) ]`
///
/// using the default [`FourierDamping::PerTime`] abscissa.
pub fn fourier_invert<F: Transform + ?Sized>(
    f: &mut F,
    t: &Real,
    n_terms: u32,
    a: &Real,
    ctx: &PrecisionContext,
) -> Result<Real> {
    fourier_invert_with(f, t, n_terms, a, FourierDamping::default(), ctx)
}

pub fn fourier_invert_with<F: Transform + ?Sized>(
    f: &mut F,
    t: &Real,
    n_terms: u32,
    a: &Real,
    damping: FourierDamping,
    ctx: &PrecisionContext,
) -> Result<Real> {
    check_time(t)?;
    let t = t.round_to(ctx);
    let u = damping.abscissa(&a.round_to(ctx), &t);
    if u.is_zero() || u.is_sign_negative() {
        return Err(Error::param(format!(
            "Fourier abscissa u must be positive, got {u}"
        )));
    }
    let step = const_pi(ctx) / &t;
    let mut acc = eval_real(f, &u, ctx)?.div_i64(2);
    for k in 1..=n_terms as i64 {
        let s = Complex::new(u.clone(), step.mul_i64(k));
        let re = f.eval(&s, ctx)?.re;
        acc = if k % 2 == 0 { acc + re } else { acc - re };
    }
    Ok((&u * &t).exp() / t * acc)
}
