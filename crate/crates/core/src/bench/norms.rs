use crate::error::{Error, Result};
use crate::numkernel::Real;

/// Exact values with magnitude at or below this are excluded from the
/// percentage error.
pub const PCT_GUARD: f64 = 1e-12;

fn check(num: &[Real], exact: &[Real]) -> Result<()> {
    if num.len() != exact.len() || num.is_empty() {
        return Err(Error::LengthMismatch {
            numerical: num.len(),
            exact: exact.len(),
        });
    }
    Ok(())
}

fn zero_like(v: &Real) -> Real {
    Real::from_float(rug::Float::new(v.prec()))
}

/// `sqrt(sum |num_i - exact_i|^2)`, not normalised by the point count.
pub fn l2_error(num: &[Real], exact: &[Real]) -> Result<Real> {
    check(num, exact)?;
    let sum = num
        .iter()
        .zip(exact)
        .fold(zero_like(&exact[0]), |acc, (a, b)| acc + (a - b).sqr());
    Ok(sum.sqrt())
}

/// `max |num_i - exact_i|`.
pub fn linf_error(num: &[Real], exact: &[Real]) -> Result<Real> {
    check(num, exact)?;
    Ok(num
        .iter()
        .zip(exact)
        .fold(zero_like(&exact[0]), |acc, (a, b)| acc.max((a - b).abs())))
}

/// `max |(num_i - exact_i) / exact_i| * 100` over points with
/// `|exact_i| > PCT_GUARD`, and the number of points skipped.
pub fn pct_error(num: &[Real], exact: &[Real]) -> Result<(Real, usize)> {
    check(num, exact)?;
    let mut best: Option<Real> = None;
    let mut skipped = 0;
    for (a, b) in num.iter().zip(exact) {
        if b.abs().to_f64() <= PCT_GUARD {
            skipped += 1;
            continue;
        }
        let p = ((a - b) / b).abs().mul_i64(100);
        best = Some(match best {
            Some(m) => m.max(p),
            None => p,
        });
    }
    best.map(|m| (m, skipped))
        .ok_or(Error::UndefinedPercent { guard: PCT_GUARD })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::PrecisionContext;
    use proptest::prelude::*;

    fn reals(v: &[f64]) -> Vec<Real> {
        let ctx = PrecisionContext::new(30).unwrap();
        v.iter().map(|&x| Real::from_f64(x, &ctx)).collect()
    }

    #[test]
    fn norm_examples() {
        let e = reals(&[1.0; 40]);
        assert_eq!(l2_error(&e, &e).unwrap().to_f64(), 0.0);
        assert_eq!(linf_error(&e, &e).unwrap().to_f64(), 0.0);
        assert_eq!(pct_error(&e, &e).unwrap().1, 0);

        let mut n = e.clone();
        n[7] = Real::from_f64(4.0, &PrecisionContext::new(30).unwrap());
        assert_eq!(l2_error(&n, &e).unwrap().to_f64(), 3.0);

        let d = 0.25;
        let shifted = reals(&[1.0 + d; 40]);
        let want = d * 40f64.sqrt();
        assert!((l2_error(&shifted, &e).unwrap().to_f64() - want).abs() < 1e-15);

        let a = reals(&[1.0, 5.0, -2.0]);
        let z = reals(&[0.0, 0.0, 0.0]);
        assert_eq!(linf_error(&a, &z).unwrap().to_f64(), 5.0);
    }

    #[test]
    fn percent_examples() {
        let (p, k) = pct_error(&reals(&[1.01, 2.0]), &reals(&[1.0, 2.0])).unwrap();
        assert!((p.to_f64() - 1.0).abs() < 1e-12);
        assert_eq!(k, 0);
        let (_, k) = pct_error(&reals(&[0.3, 2.0]), &reals(&[0.0, 2.0])).unwrap();
        assert_eq!(k, 1);
        assert!(matches!(
            pct_error(&reals(&[1.0]), &reals(&[0.0])),
            Err(Error::UndefinedPercent { .. })
        ));
    }

    #[test]
    fn length_mismatch() {
        let a = reals(&[1.0; 40]);
        let b = reals(&[1.0; 39]);
        assert!(matches!(
            l2_error(&a, &b),
            Err(Error::LengthMismatch {
                numerical: 40,
                exact: 39
            })
        ));
        assert!(linf_error(&a, &b).is_err());
        assert!(pct_error(&a, &b).is_err());
    }

    proptest! {
        #[test]
        fn linf_at_most_l2(v in proptest::collection::vec(-1e6f64..1e6, 1..50)) {
            let num = reals(&v);
            let exact = reals(&vec![0.5; v.len()]);
            let l2 = l2_error(&num, &exact).unwrap().to_f64();
            let linf = linf_error(&num, &exact).unwrap().to_f64();
            prop_assert!(linf <= l2 * (1.0 + 1e-15));
            prop_assert!(linf >= 0.0);
        }
    }
}
