//! The eight reference transform pairs used by the benchmark tables.

use crate::error::{Error, Result};
use crate::inverters::Transform;
use crate::numkernel::{const_euler_gamma, const_pi, erf_complex, Complex, PrecisionContext, Real};

type TransformFn = fn(&Complex, &PrecisionContext) -> Result<Complex>;
type ExactFn = fn(&Real, &PrecisionContext) -> Real;

/// One transform pair with its exact inverse and default Stehfest weights.
#[derive(Clone, Copy)]
pub struct TestCase {
    pub id: u32,
    /// Short machine-friendly name, safe for CSV and file names.
    pub name: &'static str,
    pub category: &'static str,
    /// F(s) in the expression grammar accepted by `exprparse`.
    pub transform_text: &'static str,
    pub exact_text: &'static str,
    pub default_stehfest_n: u32,
    /// Stehfest weights used for noisy runs. Only case 7 differs.
    pub noisy_stehfest_n: u32,
    pub default_series_terms: u32,
    transform: TransformFn,
    exact: ExactFn,
}

impl std::fmt::Debug for TestCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TestCase")
            .field("id", &self.id)
            .field("name", &self.name)
            .field("transform", &self.transform_text)
            .field("exact", &self.exact_text)
            .finish()
    }
}

impl TestCase {
    pub fn eval_transform(&self, s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
        (self.transform)(&s.round_to(ctx), ctx)
    }

    pub fn eval_exact(&self, t: &Real, ctx: &PrecisionContext) -> Result<Real> {
        if t.is_zero() || t.is_sign_negative() {
            return Err(Error::Domain(format!("exact inverse needs t > 0, got {t}")));
        }
        Ok((self.exact)(&t.round_to(ctx), ctx))
    }

    pub fn stehfest_n(&self, noisy: bool) -> u32 {
        if noisy {
            self.noisy_stehfest_n
        } else {
            self.default_stehfest_n
        }
    }
}

impl Transform for &TestCase {
    fn eval(&mut self, s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
        self.eval_transform(s, ctx)
    }
}

fn singular(s: &Complex) -> Error {
    Error::Singularity { s: s.to_string() }
}

fn checked_recip(den: &Complex, s: &Complex) -> Result<Complex> {
    if den.is_zero() {
        Err(singular(s))
    } else {
        Ok(den.recip())
    }
}

fn off_cut(s: &Complex) -> Result<()> {
    if s.on_negative_real_axis() {
        Err(singular(s))
    } else {
        Ok(())
    }
}

fn quarter(ctx: &PrecisionContext) -> Complex {
    Complex::from_real(Real::ratio(1, 4, ctx))
}

fn f1(s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let d = &s.sqr() + &Complex::one(ctx);
    Ok(s * &checked_recip(&d.sqr(), s)?)
}

fn f2(s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let d = s + &Complex::one(ctx);
    checked_recip(&d.sqr(), s)
}

fn f3(s: &Complex, _: &PrecisionContext) -> Result<Complex> {
    checked_recip(&s.powi(5), s)
}

fn f4(s: &Complex, _: &PrecisionContext) -> Result<Complex> {
    off_cut(s)?;
    Ok(s.sqrt().recip())
}

fn f5(s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    off_cut(s)?;
    let z = s.sqrt().recip().mul_i64(2);
    erf_complex(&z, ctx)
}

fn f6(s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let d = &s.sqr() - &quarter(ctx);
    checked_recip(&d, s)
}

fn f7(s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    // 4 * 0.5^4 = 0.25
    let s2 = s.sqr();
    let d = &s2.sqr() + &quarter(ctx);
    Ok(&(&s2 * s) * &checked_recip(&d, s)?)
}

fn f8(s: &Complex, _: &PrecisionContext) -> Result<Complex> {
    off_cut(s)?;
    Ok(&s.ln()? / s)
}

fn g1(t: &Real, _: &PrecisionContext) -> Real {
    (t * t.sin()).div_i64(2)
}

fn g2(t: &Real, _: &PrecisionContext) -> Real {
    t * (-t).exp()
}

fn g3(t: &Real, _: &PrecisionContext) -> Real {
    t.powi(4).div_i64(24)
}

fn g4(t: &Real, ctx: &PrecisionContext) -> Real {
    (const_pi(ctx) * t).sqrt().recip()
}

fn g5(t: &Real, ctx: &PrecisionContext) -> Real {
    t.sqrt().mul_i64(4).sin() / (const_pi(ctx) * t)
}

fn g6(t: &Real, _: &PrecisionContext) -> Real {
    t.div_i64(2).sinh().mul_i64(2)
}

fn g7(t: &Real, _: &PrecisionContext) -> Real {
    let h = t.div_i64(2);
    h.cos() * h.cosh()
}

fn g8(t: &Real, ctx: &PrecisionContext) -> Real {
    -(t.ln() + const_euler_gamma(ctx))
}

static CASES: [TestCase; 8] = [
    TestCase {
        id: 1,
        name: "half_t_sin_t",
        category: "Oscillating increasing",
        transform_text: "s/(s^2+1)^2",
        exact_text: "0.5*t*sin(t)",
        default_stehfest_n: 30,
        noisy_stehfest_n: 30,
        default_series_terms: 55,
        transform: f1,
        exact: g1,
    },
    TestCase {
        id: 2,
        name: "t_exp_neg_t",
        category: "Exponentially decreasing",
        transform_text: "1/(s+1)^2",
        exact_text: "t*exp(-t)",
        default_stehfest_n: 16,
        noisy_stehfest_n: 16,
        default_series_terms: 55,
        transform: f2,
        exact: g2,
    },
    TestCase {
        id: 3,
        name: "t4_over_24",
        category: "Increasing",
        transform_text: "1/s^5",
        exact_text: "t^4/24",
        default_stehfest_n: 16,
        noisy_stehfest_n: 16,
        default_series_terms: 55,
        transform: f3,
        exact: g3,
    },
    TestCase {
        id: 4,
        name: "inv_sqrt_pi_t",
        category: "With singularities",
        transform_text: "1/sqrt(s)",
        exact_text: "1/sqrt(pi*t)",
        default_stehfest_n: 16,
        noisy_stehfest_n: 16,
        default_series_terms: 55,
        transform: f4,
        exact: g4,
    },
    TestCase {
        id: 5,
        name: "sin_4sqrt_t_over_pi_t",
        category: "Oscillating with singularities",
        transform_text: "erf(2/sqrt(s))",
        exact_text: "sin(4*sqrt(t))/(pi*t)",
        default_stehfest_n: 16,
        noisy_stehfest_n: 16,
        default_series_terms: 55,
        transform: f5,
        exact: g5,
    },
    TestCase {
        id: 6,
        name: "sinh_half_t_over_half",
        category: "Hyperbolic",
        transform_text: "1/(s^2-0.5^2)",
        exact_text: "sinh(0.5*t)/0.5",
        default_stehfest_n: 36,
        noisy_stehfest_n: 36,
        default_series_terms: 55,
        transform: f6,
        exact: g6,
    },
    TestCase {
        id: 7,
        name: "cos_cosh_half_t",
        category: "Combination of oscillating and hyperbolic",
        transform_text: "s^3/(s^4+4*0.5^4)",
        exact_text: "cos(0.5*t)*cosh(0.5*t)",
        default_stehfest_n: 36,
        noisy_stehfest_n: 16,
        default_series_terms: 55,
        transform: f7,
        exact: g7,
    },
    TestCase {
        id: 8,
        name: "neg_ln_t_minus_gamma",
        category: "Natural log",
        transform_text: "ln(s)/s",
        exact_text: "-(ln(t)+gamma)",
        default_stehfest_n: 16,
        noisy_stehfest_n: 16,
        default_series_terms: 55,
        transform: f8,
        exact: g8,
    },
];

/// All eight cases in table order.
pub fn list_cases() -> &'static [TestCase] {
    &CASES
}

pub fn case(id: u32) -> Option<&'static TestCase> {
    CASES.iter().find(|c| c.id == id)
}

pub fn case_or_err(id: u32) -> Result<&'static TestCase> {
    case(id).ok_or_else(|| Error::param(format!("unknown case {id}; valid ids are 1-8")))
}
