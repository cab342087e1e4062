use rug::float::Constant;
use rug::Float;

use super::{Complex, PrecisionContext, Real};
use crate::error::{Error, Result};

const ERF_MAX_TERMS: usize = 100_000;

pub fn const_pi(ctx: &PrecisionContext) -> Real {
    Real::from_float(Float::with_val(ctx.binary_precision(), Constant::Pi))
}

pub fn const_ln2(ctx: &PrecisionContext) -> Real {
    Real::from_float(Float::with_val(ctx.binary_precision(), Constant::Log2))
}

/// Euler–Mascheroni constant.
pub fn const_euler_gamma(ctx: &PrecisionContext) -> Real {
    Real::from_float(Float::with_val(ctx.binary_precision(), Constant::Euler))
}

pub fn principal_sqrt(z: &Complex, ctx: &PrecisionContext) -> Complex {
    z.round_to(ctx).sqrt()
}

pub fn principal_ln(z: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    z.round_to(ctx).ln()
}

/// Complex error function from its Maclaurin series
/// `erf z = 2/sqrt(pi) * sum (-1)^n z^(2n+1) / (n! (2n+1))`.
///
/// Terms peak near `exp(|z|^2)` before decaying, so the sum runs with that
/// many extra bits and stops once a term drops below `10^(-digits-5)`
/// relative to the partial sum.
pub fn erf_complex(z: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    if !z.is_finite() {
        return Err(Error::Domain(format!("erf of non-finite argument {z}")));
    }
    let mag2 = z.norm_sqr().to_f64();
    if !mag2.is_finite() || mag2 > 1e6 {
        return Err(Error::Convergence {
            what: "erf Maclaurin series",
            iterations: 0,
        });
    }
    let guard_bits = (mag2 * std::f64::consts::LOG2_E).ceil() as u32 + 32;
    let work = PrecisionContext::from_bits(ctx.binary_precision() + guard_bits);

    let z = z.round_to(&work);
    let neg_z2 = -z.sqr();
    let threshold = Real::from_i64(10, &work).powi(-(ctx.decimal_digits() as i32) - 5);
    let threshold2 = threshold.sqr();
    let one = Real::one(&work);

    let mut power = z.clone();
    let mut sum = z.clone();
    let mut n: usize = 0;
    loop {
        power = (&power * &neg_z2).div_i64(n as i64 + 1);
        n += 1;
        let term = power.div_i64(2 * n as i64 + 1);
        sum = &sum + &term;
        // only trust the stopping test once terms are decreasing
        if n as f64 > mag2 {
            let scale = sum.norm_sqr().max(one.clone());
            if term.norm_sqr() < &threshold2 * &scale {
                break;
            }
        }
        if n >= ERF_MAX_TERMS {
            return Err(Error::Convergence {
                what: "erf Maclaurin series",
                iterations: n,
            });
        }
    }
    let two_over_sqrt_pi = Real::from_i64(2, &work) / const_pi(&work).sqrt();
    Ok(sum.scale(&two_over_sqrt_pi).round_to(ctx))
}
