use rayon::prelude::*;

use super::{ErrorReport, ExperimentRow, SampleGrid};
use crate::catalog::{case_or_err, TestCase};
use crate::error::{Error, Result};
use crate::inverters::{FourierDamping, Method, MethodConfig, Transform};
use crate::noise::{perturb_evaluator, NoiseMode, NoiseSpec};
use crate::numkernel::{PrecisionContext, Real};

/// Parameters of a benchmark suite. Defaults reproduce the reference tables:
/// all eight cases, Stehfest/Talbot/Fourier, delta 1e-3, seed 42.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub cases: Vec<u32>,
    pub methods: Vec<Method>,
    pub delta: f64,
    pub seed: u64,
    pub mode: NoiseMode,
    /// Overrides every method's term count.
    pub terms: Option<u32>,
    /// Overrides the precision policy for every row.
    pub digits: Option<u32>,
    /// Overrides the precision of noisy rows only.
    pub noisy_digits: Option<u32>,
    pub fourier_a: f64,
    pub fourier_damping: FourierDamping,
    pub include_clean: bool,
    pub include_noisy: bool,
    /// Worker threads; `None` uses rayon's default.
    pub workers: Option<usize>,
    pub grid: SampleGrid,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            cases: (1..=8).collect(),
            methods: Method::TABLE.to_vec(),
            delta: NoiseSpec::DEFAULT_DELTA,
            seed: 42,
            mode: NoiseMode::default(),
            terms: None,
            digits: None,
            noisy_digits: None,
            fourier_a: MethodConfig::DEFAULT_FOURIER_A,
            fourier_damping: FourierDamping::default(),
            include_clean: true,
            include_noisy: true,
            workers: None,
            grid: SampleGrid::default(),
        }
    }
}

impl SuiteConfig {
    /// Default term count of `method` on `case`.
    pub fn default_terms(case: &TestCase, method: Method, noisy: bool) -> u32 {
        let n = case.stehfest_n(noisy);
        match method {
            Method::Stehfest => n,
            Method::Gaver => n / 2,
            Method::SalzerGaver => (n / 2).saturating_sub(1).max(1),
            Method::Fourier | Method::Talbot => case.default_series_terms,
        }
    }

    pub fn method_config(
        &self,
        case: &TestCase,
        method: Method,
        noisy: bool,
    ) -> Result<MethodConfig> {
        let terms = self
            .terms
            .unwrap_or_else(|| Self::default_terms(case, method, noisy));
        let mut cfg = MethodConfig::new(method, terms)?;
        if let Some(d) = self.digits {
            cfg.digits = d;
        }
        if noisy {
            if let Some(d) = self.noisy_digits {
                cfg.digits = d;
            }
        }
        cfg.fourier_a = self.fourier_a;
        cfg.fourier_damping = self.fourier_damping;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Noise for the cell `(case, method)`. Each cell owns its stream.
    pub fn noise_spec(&self, case_id: u32, method: Method) -> Result<NoiseSpec> {
        Ok(NoiseSpec::new(
            self.delta,
            self.seed,
            format!("case{case_id}/{method}/noisy"),
        )?
        .with_mode(self.mode))
    }

    /// Rows in output order: case, then method, then clean before noisy.
    pub fn cells(&self) -> Result<Vec<(&'static TestCase, Method, bool)>> {
        let mut cells = Vec::new();
        for &id in &self.cases {
            let case = case_or_err(id)?;
            for &m in &self.methods {
                if self.include_clean {
                    cells.push((case, m, false));
                }
                if self.include_noisy {
                    cells.push((case, m, true));
                }
            }
        }
        Ok(cells)
    }

    pub(crate) fn pool(&self) -> Result<rayon::ThreadPool> {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(w) = self.workers {
            if w == 0 {
                return Err(Error::param("worker count must be at least 1"));
            }
            b = b.num_threads(w);
        }
        b.build()
            .map_err(|e| Error::param(format!("cannot start worker pool: {e}")))
    }
}

/// `f(t_i)` on the grid, wrapping each point-level failure with its location.
pub fn invert_on_grid(
    case: &TestCase,
    config: &MethodConfig,
    noise: Option<&NoiseSpec>,
    grid: &SampleGrid,
) -> Result<Vec<Real>> {
    let ctx = config.context()?;
    let inverter = config.inverter()?;
    let mut clean = case;
    let mut noisy = noise.map(|spec| perturb_evaluator(case, spec));
    let f: &mut dyn Transform = match noisy.as_mut() {
        Some(n) => n,
        None => &mut clean,
    };
    grid.reals(&ctx)
        .iter()
        .map(|t| {
            inverter.invert(f, t, &ctx).map_err(|e| Error::Point {
                case_id: case.id,
                method: config.method.name().to_string(),
                t: t.to_sci_string(6),
                source: Box::new(e),
            })
        })
        .collect()
}

fn exact_on_grid(case: &TestCase, ctx: &PrecisionContext, grid: &SampleGrid) -> Result<Vec<Real>> {
    grid.reals(ctx)
        .iter()
        .map(|t| case.eval_exact(t, ctx))
        .collect()
}

pub fn run_case(
    case: &TestCase,
    config: &MethodConfig,
    noise: Option<&NoiseSpec>,
    grid: &SampleGrid,
) -> Result<ExperimentRow> {
    let values = invert_on_grid(case, config, noise, grid)?;
    let exact = exact_on_grid(case, &config.context()?, grid)?;
    Ok(ExperimentRow {
        case_id: case.id,
        case_name: case.name,
        method: config.method,
        terms: config.terms,
        digits: config.digits,
        noise_on: noise.is_some(),
        delta: noise.map_or(0.0, |n| n.delta),
        seed: noise.map_or(0, |n| n.seed),
        report: ErrorReport::from_values(&values, &exact)?,
    })
}

/// Runs every cell of the suite in parallel; the result order is the
/// [`SuiteConfig::cells`] order regardless of scheduling.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<ExperimentRow>> {
    let cells = cfg.cells()?;
    let jobs = cells
        .into_iter()
        .map(|(case, m, noisy)| {
            let mc = cfg.method_config(case, m, noisy)?;
            let spec = if noisy {
                Some(cfg.noise_spec(case.id, m)?)
            } else {
                None
            };
            Ok((case, mc, spec))
        })
        .collect::<Result<Vec<_>>>()?;
    cfg.pool()?.install(|| {
        jobs.par_iter()
            .map(|(case, mc, spec)| {
                let mut row = run_case(case, mc, spec.as_ref(), &cfg.grid)?;
                row.seed = cfg.seed;
                Ok(row)
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_has_48_cells() {
        let cfg = SuiteConfig::default();
        let cells = cfg.cells().unwrap();
        assert_eq!(cells.len(), 48);
        assert_eq!(cells[0].0.id, 1);
        assert_eq!(cells[0].1, Method::Stehfest);
        assert!(!cells[0].2 && cells[1].2);
    }

    #[test]
    fn case7_uses_split_stehfest_counts() {
        let cfg = SuiteConfig::default();
        let c7 = case_or_err(7).unwrap();
        assert_eq!(
            cfg.method_config(c7, Method::Stehfest, false)
                .unwrap()
                .terms,
            36
        );
        let noisy = cfg.method_config(c7, Method::Stehfest, true).unwrap();
        assert_eq!((noisy.terms, noisy.digits), (16, 29));
    }

    #[test]
    fn noisy_digits_override_only_noisy_rows() {
        let cfg = SuiteConfig {
            noisy_digits: Some(16),
            ..SuiteConfig::default()
        };
        let c1 = case_or_err(1).unwrap();
        assert_eq!(
            cfg.method_config(c1, Method::Talbot, false).unwrap().digits,
            110
        );
        assert_eq!(
            cfg.method_config(c1, Method::Talbot, true).unwrap().digits,
            16
        );
    }

    #[test]
    fn point_failures_name_their_location() {
        // pole of case 6 at s = 0.5: Fourier with fixed abscissa lands on it
        let c6 = case_or_err(6).unwrap();
        let mut cfg = MethodConfig::new(Method::Fourier, 5).unwrap();
        cfg.fourier_a = 0.5;
        cfg.fourier_damping = FourierDamping::Fixed;
        let err = run_case(c6, &cfg, None, &SampleGrid::new(3)).unwrap_err();
        match err {
            Error::Point {
                case_id,
                ref method,
                ..
            } => {
                assert_eq!(case_id, 6);
                assert_eq!(method, "fourier");
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn zero_workers_rejected() {
        let cfg = SuiteConfig {
            workers: Some(0),
            cases: vec![2],
            methods: vec![Method::Stehfest],
            ..SuiteConfig::default()
        };
        assert!(run_suite(&cfg).is_err());
    }
}
