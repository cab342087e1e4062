//! Precision-parameterised real and complex arithmetic.
//!
//! Reals are MPFR floats (via `rug`) tagged with the precision of the
//! [`PrecisionContext`] that created them. Complex arithmetic, principal
//! branches and the complex error function are implemented here on top.

mod complex;
mod context;
mod real;
mod special;

pub use complex::Complex;
pub use context::PrecisionContext;
pub use real::Real;
pub use special::{
    const_euler_gamma, const_ln2, const_pi, erf_complex, principal_ln, principal_sqrt,
};
