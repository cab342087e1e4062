use rug::{Integer, Rational};

use super::{check_time, eval_real, guard_digits, Transform};
use crate::error::{Error, Result};
use crate::numkernel::{const_ln2, PrecisionContext, Real};

/// Exact Stehfest coefficients `A_1 .. A_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StehfestWeights {
    n: u32,
    weights: Vec<Rational>,
}

impl StehfestWeights {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// `weights()[j - 1]` is `A_j`.
    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// Sum of |A_j|.
    pub fn mass(&self) -> Rational {
        self.weights
            .iter()
            .map(|w| Rational::from(w.abs_ref()))
            .sum()
    }
}

fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

/// Stehfest weights for even `n`:
///
/// `A_j = (-1)^(n/2+j) sum_{k=floor((j+1)/2)}^{min(j,n/2)}
///        k^(n/2) (2k)! / ((n/2-k)! k! (k-1)! (j-k)! (2k-j)!)`
pub fn stehfest_weights(n: u32) -> Result<StehfestWeights> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::param(format!(
            "N must be even and positive for Stehfest, got {n}"
        )));
    }
    let half = n / 2;
    let weights = (1..=n)
        .map(|j| {
            let mut sum = Rational::new();
            for k in j.div_ceil(2)..=j.min(half) {
                let num = Integer::from(Integer::u_pow_u(k, half)) * factorial(2 * k);
                let den = factorial(half - k)
                    * factorial(k)
                    * factorial(k - 1)
                    * factorial(j - k)
                    * factorial(2 * k - j);
                sum += Rational::from((num, den));
            }
            if (half + j) % 2 == 1 {
                -sum
            } else {
                sum
            }
        })
        .collect();
    Ok(StehfestWeights { n, weights })
}

/// Gaver–Stehfest inverter with precomputed weights.
#[derive(Clone, Debug)]
pub struct Stehfest {
    weights: StehfestWeights,
    guard: u32,
}

impl Stehfest {
    pub fn new(n: u32) -> Result<Self> {
        let weights = stehfest_weights(n)?;
        let guard = guard_digits(&weights.mass());
        Ok(Stehfest { weights, guard })
    }

    pub fn weights(&self) -> &StehfestWeights {
        &self.weights
    }

    /// `(ln2/t) sum_j A_j F(j ln2/t)`.
    ///
    /// The transform is sampled and the sum accumulated with extra digits to
    /// absorb the weights' cancellation; the result is rounded to `ctx`.
    pub fn invert<F: Transform + ?Sized>(
        &self,
        f: &mut F,
        t: &Real,
        ctx: &PrecisionContext,
    ) -> Result<Real> {
        check_time(t)?;
        let work = ctx.with_guard_digits(self.guard);
        let a = const_ln2(&work) / t.round_to(&work);
        let mut acc = Real::zero(&work);
        for (j, w) in self.weights.weights.iter().enumerate() {
            let s = a.mul_i64(j as i64 + 1);
            let value = eval_real(f, &s, &work)?;
            acc = acc + Real::from_rational(w, &work) * value;
        }
        Ok((a * acc).round_to(ctx))
    }
}

pub fn stehfest_invert<F: Transform + ?Sized>(
    f: &mut F,
    t: &Real,
    n: u32,
    ctx: &PrecisionContext,
) -> Result<Real> {
    Stehfest::new(n)?.invert(f, t, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::Complex;

    fn ints(w: &StehfestWeights) -> Vec<i64> {
        w.weights()
            .iter()
            .map(|r| {
                assert_eq!(*r.denom(), 1);
                r.numer().to_i64().unwrap()
            })
            .collect()
    }

    #[test]
    fn small_weight_sets() {
        assert_eq!(ints(&stehfest_weights(2).unwrap()), vec![2, -2]);
        assert_eq!(ints(&stehfest_weights(4).unwrap()), vec![-2, 26, -48, 24]);
    }

    #[test]
    fn rational_identities_n6() {
        let w = stehfest_weights(6).unwrap();
        let sum: Rational = w.weights().iter().sum();
        assert_eq!(sum, 0);
        let moment: Rational = w
            .weights()
            .iter()
            .enumerate()
            .map(|(j, a)| Rational::from(a / (j as u32 + 1)))
            .sum();
        assert_eq!(moment, 1);
    }

    #[test]
    fn odd_or_zero_rejected() {
        assert!(stehfest_weights(15)
            .unwrap_err()
            .to_string()
            .contains("N must be even"));
        assert!(stehfest_weights(0).is_err());
    }

    #[test]
    fn reciprocal_inverts_to_one() {
        let mut recip = |s: &Complex, _: &PrecisionContext| Ok(s.recip());
        for n in [2u32, 8, 16, 30, 40] {
            let ctx = PrecisionContext::new((18 * n).div_ceil(10).max(16)).unwrap();
            for t in [0.1, 1.0, 3.7] {
                let t = Real::from_f64(t, &ctx);
                let v = stehfest_invert(&mut recip, &t, n, &ctx).unwrap();
                let err = (v - Real::one(&ctx)).abs().to_f64();
                assert!(err <= ctx.tolerance(6), "N={n} err={err:e}");
            }
        }
    }

    #[test]
    fn rejects_nonpositive_time() {
        let ctx = PrecisionContext::new(20).unwrap();
        let mut recip = |s: &Complex, _: &PrecisionContext| Ok(s.recip());
        assert!(stehfest_invert(&mut recip, &Real::zero(&ctx), 4, &ctx).is_err());
    }
}
