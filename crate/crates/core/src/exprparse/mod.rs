//! User-supplied transform expressions in the variable `s`.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' unary)?          right-associative
//! primary := number | 's' | 'pi' | 'gamma'
//!          | func '(' expr ')' | '(' expr ')'
//! func    := sqrt | exp | ln | sin | cos | sinh | cosh | erf
//! number  := digits ('.' digits?)? (('e' | 'E') ('+' | '-')? digits)?
//! ```
//!
//! `^` binds tighter than unary minus, so `-s^2` is `-(s^2)`.

mod eval;
mod parser;

pub use eval::{eval_ast, ExprTransform};
pub use parser::parse;

/// Text of the grammar, for CLI help.
pub const GRAMMAR: &str = "\
expr    := term (('+'|'-') term)*
term    := unary (('*'|'/') unary)*
unary   := '-' unary | power
power   := primary ('^' unary)?            (right-associative)
primary := number | 's' | 'pi' | 'gamma' | func '(' expr ')' | '(' expr ')'
func    := sqrt | exp | ln | sin | cos | sinh | cosh | erf
number  := digits ('.' digits?)? (('e'|'E') ('+'|'-')? digits)?
whitespace is insignificant; '-s^2' means -(s^2)";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Sqrt,
    Exp,
    Ln,
    Sin,
    Cos,
    Sinh,
    Cosh,
    Erf,
}

impl Func {
    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "sqrt" => Func::Sqrt,
            "exp" => Func::Exp,
            "ln" => Func::Ln,
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "sinh" => Func::Sinh,
            "cosh" => Func::Cosh,
            "erf" => Func::Erf,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Sqrt => "sqrt",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
            Func::Erf => "erf",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedConst {
    Pi,
    Gamma,
}

/// Expression node. `pos` is the 1-based column where the node starts
/// (for operators, the column of the operator symbol).
#[derive(Clone, Debug, PartialEq)]
pub struct ExprAst {
    pub kind: ExprKind,
    pub pos: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    /// Decimal literal, text kept verbatim so it can be rounded at any precision.
    Number(String),
    Var,
    Const(NamedConst),
    Neg(Box<ExprAst>),
    Binary(BinaryOp, Box<ExprAst>, Box<ExprAst>),
    Call(Func, Box<ExprAst>),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at column {position}: expected {expected}, found {found}")]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
    pub found: String,
}
