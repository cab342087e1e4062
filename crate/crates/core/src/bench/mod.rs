//! Error norms, experiment runner and table/plot emitters.
//!
//! A suite is a list of (case, method, noise on/off) cells. Each cell inverts
//! its case on the 40-point grid `t = 0.1, 0.2, ..., 4.0` and reports the
//! root-sum-square, maximum and maximum-percent errors against the exact
//! inverse.

mod emit;
mod norms;
mod run;

pub use emit::{
    emit_csv, emit_markdown, emit_plot_data, format_mantissa_exp, markdown_tables, CSV_HEADER,
};
pub use norms::{l2_error, linf_error, pct_error, PCT_GUARD};
pub use run::{invert_on_grid, run_case, run_suite, SuiteConfig};

use rug::Rational;

use crate::inverters::Method;
use crate::numkernel::{PrecisionContext, Real};

/// Evaluation times `t_i = i/10`, `i = 1..=count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleGrid {
    points: Vec<Rational>,
}

impl SampleGrid {
    pub const DEFAULT_COUNT: u32 = 40;

    pub fn new(count: u32) -> Self {
        SampleGrid {
            points: (1..=count as i32)
                .map(|i| Rational::from((i, 10)))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Exact grid points.
    pub fn points(&self) -> &[Rational] {
        &self.points
    }

    pub fn reals(&self, ctx: &PrecisionContext) -> Vec<Real> {
        self.points
            .iter()
            .map(|p| Real::from_rational(p, ctx))
            .collect()
    }
}

impl Default for SampleGrid {
    fn default() -> Self {
        SampleGrid::new(Self::DEFAULT_COUNT)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ErrorReport {
    pub l2: f64,
    pub linf: f64,
    pub pct_max: f64,
    pub skipped_pct_points: usize,
}

impl ErrorReport {
    pub fn from_values(num: &[Real], exact: &[Real]) -> crate::Result<Self> {
        let (pct, skipped) = pct_error(num, exact)?;
        Ok(ErrorReport {
            l2: l2_error(num, exact)?.to_f64(),
            linf: linf_error(num, exact)?.to_f64(),
            pct_max: pct.to_f64(),
            skipped_pct_points: skipped,
        })
    }
}

/// One cell of a results table.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentRow {
    pub case_id: u32,
    pub case_name: &'static str,
    pub method: Method,
    pub terms: u32,
    pub digits: u32,
    pub noise_on: bool,
    /// 0 for noise-free rows.
    pub delta: f64,
    pub seed: u64,
    pub report: ErrorReport,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_shape() {
        let g = SampleGrid::default();
        assert_eq!(g.len(), 40);
        assert_eq!(g.points()[0], Rational::from((1, 10)));
        assert_eq!(g.points()[39], 4);
        assert!(g.points().windows(2).all(|w| w[0] < w[1]));
        let ctx = PrecisionContext::new(30).unwrap();
        assert_eq!(g.reals(&ctx)[9].to_f64(), 1.0);
    }
}
