use super::{check_time, Transform};
use crate::error::{Error, Result};
use crate::numkernel::{const_pi, Complex, PrecisionContext, Real};

fn taylor_radius(ctx: &PrecisionContext) -> f64 {
    10f64.powf(-(ctx.decimal_digits() as f64) / 4.0)
}

/// `1 - e^(-z)`, rejecting the removable endpoints `z = +-2 pi i`.
fn denominator(z: &Complex, ctx: &PrecisionContext) -> Result<(Complex, Complex)> {
    let e = (-z).exp();
    let d = Complex::one(ctx) - &e;
    if d.abs().to_f64() < ctx.tolerance(2) {
        return Err(Error::RemovableEndpoint { z: z.to_string() });
    }
    Ok((d, e))
}

/// Talbot contour `s(z) = z / (1 - e^(-z))`.
///
/// Near `z = 0` the series `1 + z/2 + z^2/12 - z^4/720 + z^6/30240` is used.
pub fn talbot_map(z: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    if z.abs().to_f64() < taylor_radius(ctx) {
        let z2 = z.sqr();
        let z4 = z2.sqr();
        let z6 = &z4 * &z2;
        return Ok(
            Complex::one(ctx) + z.div_i64(2) + z2.div_i64(12) - z4.div_i64(720) + z6.div_i64(30240),
        );
    }
    let (d, _) = denominator(z, ctx)?;
    z.checked_div(&d)
}

/// `s'(z) = (1 - (1 + z) e^(-z)) / (1 - e^(-z))^2`.
pub fn talbot_map_deriv(z: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    if z.abs().to_f64() < taylor_radius(ctx) {
        let z2 = z.sqr();
        let z3 = &z2 * z;
        let z5 = &z3 * &z2;
        return Ok(
            Complex::one(ctx).div_i64(2) + z.div_i64(6) - z3.div_i64(180) + z5.div_i64(5040),
        );
    }
    let (d, e) = denominator(z, ctx)?;
    let num = Complex::one(ctx) - (Complex::one(ctx) + z) * e;
    num.checked_div(&d.sqr())
}

/// Trapezoid abscissae `w_j = 2 pi (2j/n - 1)`, `j = 1 .. n-1`.
///
/// For odd `n` none of them is zero and `w_{n-j} = -w_j`.
pub fn talbot_nodes(n: u32, ctx: &PrecisionContext) -> Result<Vec<Real>> {
    check_odd(n)?;
    let two_pi = const_pi(ctx).mul_i64(2);
    Ok((1..n as i64)
        .map(|j| two_pi.mul_i64(2 * j - n as i64).div_i64(n as i64))
        .collect())
}

fn check_odd(n: u32) -> Result<()> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::param(format!(
            "n must be odd and at least 3 for Talbot, got {n}"
        )));
    }
    Ok(())
}

fn integrand<F: Transform + ?Sized>(
    f: &mut F,
    z: &Complex,
    t: &Real,
    scale: &Real,
    ctx: &PrecisionContext,
) -> Result<Complex> {
    let s = talbot_map(z, ctx)?.scale(scale);
    let ds = talbot_map_deriv(z, ctx)?.scale(scale);
    let value = f.eval(&s, ctx)?;
    Ok(value * s.scale(t).exp() * ds)
}

/// `(2/n) sum_{j=1}^{n-1} F(s(i w_j)) e^(s t) s'(i w_j)` on the contour
/// `lambda s(z)`, `lambda = scale`.
///
/// Nodes are taken in mirrored pairs so that for a conjugate-symmetric `F`
/// the imaginary part of the sum vanishes.
pub fn talbot_sum<F: Transform + ?Sized>(
    f: &mut F,
    t: &Real,
    n: u32,
    scale: &Real,
    ctx: &PrecisionContext,
) -> Result<Complex> {
    check_time(t)?;
    check_odd(n)?;
    if scale.is_zero() || scale.is_sign_negative() {
        return Err(Error::param("contour scale must be positive"));
    }
    let t = t.round_to(ctx);
    let scale = scale.round_to(ctx);
    let nodes = talbot_nodes(n, ctx)?;
    let mut acc = Complex::zero(ctx);
    for w in &nodes[..(n as usize - 1) / 2] {
        let z = Complex::new(Real::zero(ctx), w.clone());
        let lower = integrand(f, &z, &t, &scale, ctx)?;
        let upper = integrand(f, &z.conj(), &t, &scale, ctx)?;
        acc = acc + (lower + upper);
    }
    Ok(acc.mul_i64(2).div_i64(n as i64))
}

/// Fixed-contour Talbot inversion, `Re` of [`talbot_sum`] with unit scale.
pub fn talbot_invert<F: Transform + ?Sized>(
    f: &mut F,
    t: &Real,
    n: u32,
    ctx: &PrecisionContext,
) -> Result<Real> {
    Ok(talbot_sum(f, t, n, &Real::one(ctx), ctx)?.re)
}
