use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::Round;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use super::PrecisionContext;
use crate::error::{Error, Result};

/// A multiprecision real number.
///
/// The value carries its own binary precision. Binary operations produce a
/// result at the wider of the two operand precisions.
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct Real(Float);

impl Real {
    pub fn zero(ctx: &PrecisionContext) -> Self {
        Real(Float::new(ctx.binary_precision()))
    }

    pub fn one(ctx: &PrecisionContext) -> Self {
        Self::from_i64(1, ctx)
    }

    pub fn from_i64(v: i64, ctx: &PrecisionContext) -> Self {
        Real(Float::with_val(ctx.binary_precision(), v))
    }

    pub fn from_f64(v: f64, ctx: &PrecisionContext) -> Self {
        Real(Float::with_val(ctx.binary_precision(), v))
    }

    pub fn from_integer(v: &Integer, ctx: &PrecisionContext) -> Self {
        Real(Float::with_val(ctx.binary_precision(), v))
    }

    /// Rounds an exact rational into the context.
    pub fn from_rational(v: &Rational, ctx: &PrecisionContext) -> Self {
        Real(Float::with_val(ctx.binary_precision(), v))
    }

    /// `num / den` rounded once.
    pub fn ratio(num: i64, den: i64, ctx: &PrecisionContext) -> Self {
        Self::from_rational(&Rational::from((num, den)), ctx)
    }

    /// Parses decimal text (`"2.5"`, `"1e-3"`, ...) at the context precision.
    pub fn parse(text: &str, ctx: &PrecisionContext) -> Result<Self> {
        let parsed = Float::parse(text)
            .map_err(|e| Error::param(format!("cannot parse number {text:?}: {e}")))?;
        Ok(Real(Float::with_val(ctx.binary_precision(), parsed)))
    }

    pub(crate) fn from_float(f: Float) -> Self {
        Real(f)
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    /// Rounds (or widens) to the context's precision.
    pub fn round_to(&self, ctx: &PrecisionContext) -> Self {
        Real(Float::with_val(ctx.binary_precision(), &self.0))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative()
    }

    /// Integer value if the number is exactly integral and fits an i64.
    pub fn to_exact_i64(&self) -> Option<i64> {
        if !self.0.is_integer() {
            return None;
        }
        self.0.to_integer().and_then(|i| i.to_i64())
    }

    pub fn abs(&self) -> Self {
        Real(self.0.clone().abs())
    }

    pub fn sqr(&self) -> Self {
        Real(self.0.clone().square())
    }

    pub fn sqrt(&self) -> Self {
        Real(self.0.clone().sqrt())
    }

    pub fn exp(&self) -> Self {
        Real(self.0.clone().exp())
    }

    /// Natural logarithm; negative input gives NaN, zero gives -inf.
    pub fn ln(&self) -> Self {
        Real(self.0.clone().ln())
    }

    pub fn sin(&self) -> Self {
        Real(self.0.clone().sin())
    }

    pub fn cos(&self) -> Self {
        Real(self.0.clone().cos())
    }

    pub fn sin_cos(&self) -> (Self, Self) {
        let (s, c) = self.0.clone().sin_cos(Float::new(self.prec()));
        (Real(s), Real(c))
    }

    pub fn sinh(&self) -> Self {
        Real(self.0.clone().sinh())
    }

    pub fn cosh(&self) -> Self {
        Real(self.0.clone().cosh())
    }

    pub fn sinh_cosh(&self) -> (Self, Self) {
        let (s, c) = self.0.clone().sinh_cosh(Float::new(self.prec()));
        (Real(s), Real(c))
    }

    /// Four-quadrant arctangent of `self / x`.
    pub fn atan2(&self, x: &Real) -> Self {
        let prec = self.prec().max(x.prec());
        Real(Float::with_val(prec, &self.0).atan2(&x.0))
    }

    pub fn hypot(&self, other: &Real) -> Self {
        let prec = self.prec().max(other.prec());
        Real(Float::with_val(prec, &self.0).hypot(&other.0))
    }

    pub fn powi(&self, k: i32) -> Self {
        Real(self.0.clone().pow(k))
    }

    pub fn recip(&self) -> Self {
        Real(self.0.clone().recip())
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        Real(self.0.clone() * k)
    }

    pub fn div_i64(&self, k: i64) -> Self {
        Real(self.0.clone() / k)
    }

    pub fn max(self, other: Real) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn total_cmp(&self, other: &Real) -> Ordering {
        self.0.total_cmp(&other.0)
    }

    /// Decimal rendering with `digits` significant digits, e.g. `8.427e-1`.
    pub fn to_sci_string(&self, digits: usize) -> String {
        self.0
            .to_string_radix_round(10, Some(digits.max(1)), Round::Nearest)
    }

    /// Like [`Real::to_sci_string`] but positional (`0.0123`, `26.5`) when
    /// the decimal exponent lies in `-6..21`. Trailing zeros are kept.
    pub fn to_plain_string(&self, digits: usize) -> String {
        let sci = self.to_sci_string(digits);
        let (mant, exp) = match sci.split_once('e') {
            Some((m, e)) => match e.parse::<i64>() {
                Ok(e) => (m, e),
                Err(_) => return sci,
            },
            None => return sci,
        };
        if !(-6..21).contains(&exp) {
            return sci;
        }
        let (sign, mant) = match mant.strip_prefix('-') {
            Some(m) => ("-", m),
            None => ("", mant),
        };
        let ds: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
        let point = exp + 1;
        if point <= 0 {
            format!("{sign}0.{}{ds}", "0".repeat((-point) as usize))
        } else if point as usize >= ds.len() {
            format!("{sign}{ds}{}", "0".repeat(point as usize - ds.len()))
        } else {
            let (int, frac) = ds.split_at(point as usize);
            format!("{sign}{int}.{frac}")
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

fn wider(a: &Float, b: &Float) -> u32 {
    a.prec().max(b.prec())
}

macro_rules! real_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                Real(Float::with_val(wider(&self.0, &rhs.0), &self.0 $op &rhs.0))
            }
        }
        impl $trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $trait<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

real_binop!(Add, add, +);
real_binop!(Sub, sub, -);
real_binop!(Mul, mul, *);
real_binop!(Div, div, /);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0.clone())
    }
}
