//! Multiprecision numerical inversion of the Laplace transform.
//!
//! Three classical inverters are provided over arbitrary transform
//! evaluators: the Dubner–Abate Fourier series, Gaver–Stehfest (with the
//! underlying Gaver functional and Salzer acceleration) and the fixed
//! Talbot contour. A catalog of eight test transforms, a seeded noise
//! wrapper and a benchmark harness measure how each method copes with
//! perturbed transform data.

pub mod bench;
pub mod catalog;
pub mod error;
pub mod exprparse;
pub mod inverters;
pub mod noise;
pub mod numkernel;

pub use error::{Error, Result};
pub use numkernel::{Complex, PrecisionContext, Real};
