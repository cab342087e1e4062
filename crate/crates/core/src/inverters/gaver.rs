use rug::{Integer, Rational};

use super::{check_time, eval_real, guard_digits, Transform};
use crate::error::{Error, Result};
use crate::numkernel::{const_ln2, PrecisionContext, Real};

fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

fn binomial(n: u32, k: u32) -> Integer {
    Integer::from(Integer::binomial_u(n, k))
}

/// `(2n)! / (n! (n-1)!)`
fn gaver_prefactor(n: u32) -> Integer {
    factorial(2 * n) / (factorial(n) * factorial(n - 1))
}

/// Sum of the absolute coefficients applied to F in the order-n functional
/// (without the common ln2/t factor).
fn gaver_mass(n: u32) -> Integer {
    gaver_prefactor(n) << n
}

/// Order-`n` functional evaluated entirely in `work`; `a = ln2/t`.
fn gaver_in<F: Transform + ?Sized>(
    f: &mut F,
    a: &Real,
    n: u32,
    work: &PrecisionContext,
) -> Result<Real> {
    let mut acc = Real::zero(work);
    for k in 0..=n {
        let s = a.mul_i64((k + n) as i64);
        let value = eval_real(f, &s, work)?;
        let c = Real::from_integer(&binomial(n, k), work) * value;
        acc = if k % 2 == 0 { acc + c } else { acc - c };
    }
    Ok(a * Real::from_integer(&gaver_prefactor(n), work) * acc)
}

/// Gaver functional
/// `f_n(t) = (ln2/t) (2n)!/(n!(n-1)!) sum_{k=0}^{n} C(n,k) (-1)^k F((k+n) ln2/t)`.
pub fn gaver_functional<F: Transform + ?Sized>(
    f: &mut F,
    t: &Real,
    n: u32,
    ctx: &PrecisionContext,
) -> Result<Real> {
    check_time(t)?;
    if n == 0 {
        return Err(Error::param("Gaver order n must be at least 1"));
    }
    let work = ctx.with_guard_digits(guard_digits(&Rational::from(gaver_mass(n))));
    let a = const_ln2(&work) / t.round_to(&work);
    Ok(gaver_in(f, &a, n, &work)?.round_to(ctx))
}

/// Salzer means `mu_{nk} = (-1)^(n+k) (1+k)^n / (k! (n-k)!)`, `k = 0..n`.
pub fn salzer_weights(n: u32) -> Result<Vec<Rational>> {
    if n == 0 {
        return Err(Error::param("Salzer order n must be at least 1"));
    }
    Ok((0..=n)
        .map(|k| {
            let num = Integer::from(Integer::u_pow_u(1 + k, n));
            let w = Rational::from((num, factorial(k) * factorial(n - k)));
            if (n + k) % 2 == 1 {
                -w
            } else {
                w
            }
        })
        .collect())
}

/// Salzer-accelerated Gaver sequence: `sum_{k=0}^{n} mu_{nk} f_{k+1}(t)`.
///
/// Algebraically identical to Stehfest with `2n + 2` weights.
pub fn salzer_gaver_invert<F: Transform + ?Sized>(
    f: &mut F,
    t: &Real,
    n: u32,
    ctx: &PrecisionContext,
) -> Result<Real> {
    check_time(t)?;
    let mu = salzer_weights(n)?;
    let mass: Rational = mu
        .iter()
        .enumerate()
        .map(|(k, m)| Rational::from(m.abs_ref()) * gaver_mass(k as u32 + 1))
        .sum();
    let work = ctx.with_guard_digits(guard_digits(&mass));
    let a = const_ln2(&work) / t.round_to(&work);
    let mut acc = Real::zero(&work);
    for (k, m) in mu.iter().enumerate() {
        let fk = gaver_in(f, &a, k as u32 + 1, &work)?;
        acc = acc + Real::from_rational(m, &work) * fk;
    }
    Ok(acc.round_to(ctx))
}
