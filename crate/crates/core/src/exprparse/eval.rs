use super::{parse, BinaryOp, ExprAst, ExprKind, Func, NamedConst};
use crate::error::{Error, Result};
use crate::inverters::Transform;
use crate::numkernel::{const_euler_gamma, const_pi, erf_complex, Complex, PrecisionContext, Real};

/// Integer exponents up to this magnitude are evaluated by repeated
/// multiplication, keeping `s^k` free of branch-cut rounding.
const MAX_REPEATED_POWER: i64 = 64;

fn domain(what: &str, pos: usize) -> Error {
    Error::Domain(format!("{what} at column {pos}"))
}

/// Evaluates the expression at `s` on principal branches.
pub fn eval_ast(ast: &ExprAst, s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let pos = ast.pos;
    Ok(match &ast.kind {
        ExprKind::Number(text) => Complex::from_real(Real::parse(text, ctx)?),
        ExprKind::Var => s.round_to(ctx),
        ExprKind::Const(NamedConst::Pi) => Complex::from_real(const_pi(ctx)),
        ExprKind::Const(NamedConst::Gamma) => Complex::from_real(const_euler_gamma(ctx)),
        ExprKind::Neg(arg) => -eval_ast(arg, s, ctx)?,
        ExprKind::Binary(op, lhs, rhs) => {
            let a = eval_ast(lhs, s, ctx)?;
            let b = eval_ast(rhs, s, ctx)?;
            match op {
                BinaryOp::Add => &a + &b,
                BinaryOp::Sub => &a - &b,
                BinaryOp::Mul => &a * &b,
                BinaryOp::Div => a
                    .checked_div(&b)
                    .map_err(|_| domain("division by zero", pos))?,
                BinaryOp::Pow => power(&a, &b, pos)?,
            }
        }
        ExprKind::Call(func, arg) => {
            let z = eval_ast(arg, s, ctx)?;
            match func {
                Func::Sqrt => {
                    if z.is_zero() {
                        return Err(domain("sqrt of zero", pos));
                    }
                    z.sqrt()
                }
                Func::Exp => z.exp(),
                Func::Ln => z.ln().map_err(|_| domain("ln of zero", pos))?,
                Func::Sin => z.sin(),
                Func::Cos => z.cos(),
                Func::Sinh => z.sinh(),
                Func::Cosh => z.cosh(),
                Func::Erf => erf_complex(&z, ctx)?,
            }
        }
    })
}

fn power(base: &Complex, exponent: &Complex, pos: usize) -> Result<Complex> {
    if exponent.is_real() {
        if let Some(k) = exponent.re.to_exact_i64() {
            if k.abs() <= MAX_REPEATED_POWER {
                if k < 0 && base.is_zero() {
                    return Err(domain("division by zero", pos));
                }
                return Ok(base.powi(k));
            }
        }
    }
    if base.is_zero() {
        return Err(domain("non-integer power of zero", pos));
    }
    base.pow(exponent)
}

/// A parsed expression usable wherever a transform evaluator is expected.
#[derive(Clone, Debug)]
pub struct ExprTransform {
    ast: ExprAst,
    source: String,
}

impl ExprTransform {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(ExprTransform {
            ast: parse(text)?,
            source: text.to_string(),
        })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn ast(&self) -> &ExprAst {
        &self.ast
    }
}

impl Transform for ExprTransform {
    fn eval(&mut self, s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
        eval_ast(&self.ast, s, ctx)
    }
}
