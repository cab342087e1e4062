use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{PrecisionContext, Real};
use crate::error::{Error, Result};

/// A multiprecision complex number `re + i im`.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn from_real(re: Real) -> Self {
        let im = Real::zero(&PrecisionContext::from_bits(re.prec()));
        Complex { re, im }
    }

    pub fn from_f64(re: f64, im: f64, ctx: &PrecisionContext) -> Self {
        Complex::new(Real::from_f64(re, ctx), Real::from_f64(im, ctx))
    }

    pub fn zero(ctx: &PrecisionContext) -> Self {
        Complex::new(Real::zero(ctx), Real::zero(ctx))
    }

    pub fn one(ctx: &PrecisionContext) -> Self {
        Complex::new(Real::one(ctx), Real::zero(ctx))
    }

    pub fn i(ctx: &PrecisionContext) -> Self {
        Complex::new(Real::zero(ctx), Real::one(ctx))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn round_to(&self, ctx: &PrecisionContext) -> Self {
        Complex::new(self.re.round_to(ctx), self.im.round_to(ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// True on the closed negative real axis, including the origin.
    pub fn on_negative_real_axis(&self) -> bool {
        self.im.is_zero() && (self.re.is_zero() || self.re.is_sign_negative())
    }

    pub fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -&self.im)
    }

    pub fn abs(&self) -> Real {
        self.re.hypot(&self.im)
    }

    pub fn norm_sqr(&self) -> Real {
        self.re.sqr() + self.im.sqr()
    }

    /// Principal argument in (-pi, pi]. A negative-zero imaginary part is
    /// treated as +0 so the negative real axis maps to +pi.
    pub fn arg(&self) -> Real {
        if self.im.is_zero() {
            let im = Real::zero(&PrecisionContext::from_bits(self.im.prec()));
            im.atan2(&self.re)
        } else {
            self.im.atan2(&self.re)
        }
    }

    pub fn scale(&self, k: &Real) -> Self {
        Complex::new(&self.re * k, &self.im * k)
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        Complex::new(self.re.mul_i64(k), self.im.mul_i64(k))
    }

    pub fn div_i64(&self, k: i64) -> Self {
        Complex::new(self.re.div_i64(k), self.im.div_i64(k))
    }

    /// Multiply by `i`.
    pub fn mul_i(&self) -> Self {
        Complex::new(-&self.im, self.re.clone())
    }

    pub fn sqr(&self) -> Self {
        let re = self.re.sqr() - self.im.sqr();
        let im = (&self.re * &self.im).mul_i64(2);
        Complex::new(re, im)
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sqr();
        Complex::new(&self.re / &d, -(&self.im / &d))
    }

    /// Division that reports a zero divisor instead of producing inf/NaN.
    pub fn checked_div(&self, rhs: &Complex) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        Ok(self / rhs)
    }

    /// Integer power by repeated multiplication (`s^3 = s*s*s`).
    pub fn powi(&self, k: i64) -> Self {
        let n = k.unsigned_abs();
        let ctx = PrecisionContext::from_bits(self.prec());
        let mut acc = Complex::one(&ctx);
        for _ in 0..n {
            acc = &acc * self;
        }
        if k < 0 {
            acc.recip()
        } else {
            acc
        }
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Complex::new(&m * c, m * s)
    }

    /// Principal logarithm, branch cut on the negative real axis.
    pub fn ln(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("logarithm of zero".into()));
        }
        Ok(Complex::new(self.abs().ln(), self.arg()))
    }

    /// Principal square root (`Re >= 0`, argument in (-pi/2, pi/2]).
    pub fn sqrt(&self) -> Self {
        let ctx = PrecisionContext::from_bits(self.prec());
        if self.is_zero() {
            return Complex::zero(&ctx);
        }
        let r = self.abs();
        let two = Real::from_i64(2, &ctx);
        if !self.re.is_sign_negative() {
            let a = ((&r + &self.re) / &two).sqrt();
            let b = &self.im / (&a * &two);
            Complex::new(a, b)
        } else {
            let mut b = ((&r - &self.re) / &two).sqrt();
            if self.im.is_sign_negative() && !self.im.is_zero() {
                b = -b;
            }
            let a = &self.im / (&b * &two);
            Complex::new(a, b)
        }
    }

    /// `self^w = exp(w ln self)` on the principal branch.
    pub fn pow(&self, w: &Complex) -> Result<Self> {
        Ok((w * &self.ln()?).exp())
    }

    pub fn sin(&self) -> Self {
        let (s, c) = self.re.sin_cos();
        let (sh, ch) = self.im.sinh_cosh();
        Complex::new(s * ch, c * sh)
    }

    pub fn cos(&self) -> Self {
        let (s, c) = self.re.sin_cos();
        let (sh, ch) = self.im.sinh_cosh();
        Complex::new(c * ch, -(s * sh))
    }

    pub fn sinh(&self) -> Self {
        let (sh, ch) = self.re.sinh_cosh();
        let (s, c) = self.im.sin_cos();
        Complex::new(sh * c, ch * s)
    }

    pub fn cosh(&self) -> Self {
        let (sh, ch) = self.re.sinh_cosh();
        let (s, c) = self.im.sin_cos();
        Complex::new(ch * c, sh * s)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_f64_pair();
        if im.is_sign_negative() {
            write!(f, "{re:e}-{:e}i", -im)
        } else {
            write!(f, "{re:e}+{im:e}i")
        }
    }
}

impl From<Real> for Complex {
    fn from(re: Real) -> Self {
        Complex::from_real(re)
    }
}

impl Add<&Complex> for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&Complex> for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&Complex> for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        Complex::new(re, im)
    }
}

impl Div<&Complex> for &Complex {
    type Output = Complex;
    fn div(self, rhs: &Complex) -> Complex {
        let d = rhs.norm_sqr();
        let re = (&self.re * &rhs.re + &self.im * &rhs.im) / &d;
        let im = (&self.im * &rhs.re - &self.re * &rhs.im) / &d;
        Complex::new(re, im)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<Complex> for Complex {
            type Output = Complex;
            fn $method(self, rhs: Complex) -> Complex {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Complex> for Complex {
            type Output = Complex;
            fn $method(self, rhs: &Complex) -> Complex {
                (&self).$method(rhs)
            }
        }
        impl $trait<Complex> for &Complex {
            type Output = Complex;
            fn $method(self, rhs: Complex) -> Complex {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-&self.re, -&self.im)
    }
}
