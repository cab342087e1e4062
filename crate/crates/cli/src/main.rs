//! `ilt`: numerical inverse Laplace transforms from the command line.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use ilt_core::bench::{emit_csv, emit_plot_data, markdown_tables, run_suite, SuiteConfig};
use ilt_core::catalog::{case_or_err, list_cases, TestCase};
use ilt_core::exprparse::{ExprTransform, GRAMMAR};
use ilt_core::inverters::{salzer_weights, stehfest_weights, Method, MethodConfig, Transform};
use ilt_core::noise::{perturb_evaluator, NoiseMode, NoiseSpec};
use ilt_core::{Complex, PrecisionContext, Real};

use output::{write_all, CliError};

#[derive(Parser, Debug)]
#[command(
    name = "ilt",
    version,
    about = "Multiprecision numerical inverse Laplace transforms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invert a catalog case or an expression at one or more times.
    #[command(group(ArgGroup::new("source").required(true).args(["case", "expr"])))]
    #[command(after_long_help = GRAMMAR)]
    Invert(InvertArgs),
    /// Print exact Stehfest (or Salzer) weights.
    Weights(WeightsArgs),
    /// List the built-in test cases.
    Cases,
    /// Run the benchmark suite and write CSV or Markdown tables.
    Bench(BenchArgs),
    /// Write per-t reconstructions of one case for plotting.
    Plotdata(PlotArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Stehfest,
    Gaver,
    SalzerGaver,
    Fourier,
    Talbot,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Stehfest => Method::Stehfest,
            MethodArg::Gaver => Method::Gaver,
            MethodArg::SalzerGaver => Method::SalzerGaver,
            MethodArg::Fourier => Method::Fourier,
            MethodArg::Talbot => Method::Talbot,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Real,
    Complex,
}

impl From<ModeArg> for NoiseMode {
    fn from(m: ModeArg) -> NoiseMode {
        match m {
            ModeArg::Real => NoiseMode::RealOnly,
            ModeArg::Complex => NoiseMode::IndependentComplex,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Md,
}

/// Options shared by every command that runs inverters.
#[derive(Args, Debug)]
struct MethodOpts {
    /// Terms: Stehfest weights N (even), Talbot nodes n (odd), Fourier terms,
    /// Gaver / Salzer-Gaver order.
    #[arg(short = 'N', long = "n")]
    n: Option<u32>,
    /// Decimal digits of working precision (default: 1.8 per Stehfest weight,
    /// 2 per Talbot/Fourier term, at least 16).
    #[arg(long)]
    digits: Option<u32>,
    /// Fourier damping parameter a, with abscissa u = a/t.
    #[arg(long, default_value_t = MethodConfig::DEFAULT_FOURIER_A)]
    fourier_a: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, value_enum, default_value = "real")]
    noise_mode: ModeArg,
}

#[derive(Args, Debug)]
struct InvertArgs {
    #[arg(long, value_enum, default_value = "talbot")]
    method: MethodArg,
    /// Invert with every method, one line each.
    #[arg(long)]
    all_methods: bool,
    #[command(flatten)]
    opts: MethodOpts,
    /// Add uniform noise of this magnitude to every transform value.
    #[arg(long)]
    noise: Option<f64>,
    /// Catalog case id (1-8).
    #[arg(long)]
    case: Option<u32>,
    /// Transform F(s) as an expression, e.g. "1/(s+1)^2".
    #[arg(long)]
    expr: Option<String>,
    /// Time(s) at which to evaluate f.
    #[arg(long = "t", required = true, num_args = 1.., allow_negative_numbers = true)]
    t: Vec<String>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("kind").args(["stehfest", "salzer"])))]
struct WeightsArgs {
    /// Stehfest weights A_1..A_N (default).
    #[arg(long)]
    stehfest: bool,
    /// Salzer means mu_0..mu_n.
    #[arg(long)]
    salzer: bool,
    #[arg(short = 'N', long = "n", required = true)]
    n: u32,
    /// Digits for the decimal column.
    #[arg(long)]
    digits: Option<u32>,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Methods to run (default: stehfest, talbot, fourier).
    #[arg(long, value_enum, num_args = 1..)]
    method: Vec<MethodArg>,
    #[arg(long)]
    all_methods: bool,
    #[command(flatten)]
    opts: MethodOpts,
    /// Digits for noisy rows only; 16 reproduces a double-precision run.
    #[arg(long)]
    noisy_digits: Option<u32>,
    /// Noise magnitude for the noisy rows.
    #[arg(long, default_value_t = NoiseSpec::DEFAULT_DELTA)]
    noise: f64,
    /// Case ids (default: all eight).
    #[arg(long, num_args = 1..)]
    case: Vec<u32>,
    /// Output file (csv) or directory (md). Standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Worker threads (default: one per core).
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args, Debug)]
struct PlotArgs {
    #[arg(long, value_enum, num_args = 1..)]
    method: Vec<MethodArg>,
    #[arg(long)]
    all_methods: bool,
    #[command(flatten)]
    opts: MethodOpts,
    #[arg(long)]
    noisy_digits: Option<u32>,
    /// Reconstruct from noisy data with this magnitude.
    #[arg(long)]
    noise: Option<f64>,
    #[arg(long, required = true)]
    case: u32,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    workers: Option<usize>,
}

enum Source {
    Case(&'static TestCase),
    Expr(ExprTransform),
}

impl Transform for Source {
    fn eval(&mut self, s: &Complex, ctx: &PrecisionContext) -> ilt_core::Result<Complex> {
        match self {
            Source::Case(c) => c.eval_transform(s, ctx),
            Source::Expr(e) => e.eval(s, ctx),
        }
    }
}

fn default_terms(source: &Source, method: Method, noisy: bool) -> u32 {
    match source {
        Source::Case(c) => SuiteConfig::default_terms(c, method, noisy),
        Source::Expr(_) => match method {
            Method::Stehfest => 16,
            Method::Gaver => 8,
            Method::SalzerGaver => 7,
            Method::Fourier | Method::Talbot => 55,
        },
    }
}

fn cmd_invert(args: InvertArgs) -> Result<(), CliError> {
    let source = match (&args.case, &args.expr) {
        (Some(id), None) => Source::Case(case_or_err(*id)?),
        (None, Some(text)) => Source::Expr(ExprTransform::parse(text)?),
        _ => return Err(CliError::usage("give exactly one of --case or --expr")),
    };
    let methods = if args.all_methods {
        Method::ALL.to_vec()
    } else {
        vec![args.method.into()]
    };
    let noisy = args.noise.is_some();
    let mut lines = Vec::new();
    for method in methods {
        let terms = args
            .opts
            .n
            .unwrap_or_else(|| default_terms(&source, method, noisy));
        let mut cfg = MethodConfig::new(method, terms)?;
        if let Some(d) = args.opts.digits {
            cfg = cfg.with_digits(d);
        }
        cfg.fourier_a = args.opts.fourier_a;
        let ctx = cfg.context()?;
        let inverter = cfg.inverter()?;
        let times = args
            .t
            .iter()
            .map(|t| Real::parse(t, &ctx))
            .collect::<ilt_core::Result<Vec<_>>>()?;
        let base = match &source {
            Source::Case(c) => Source::Case(c),
            Source::Expr(e) => Source::Expr(e.clone()),
        };
        let mut f: Box<dyn Transform> = match args.noise {
            Some(delta) => {
                let spec = NoiseSpec::new(delta, args.opts.seed, format!("invert/{method}"))?
                    .with_mode(args.opts.noise_mode.into());
                Box::new(perturb_evaluator(base, &spec))
            }
            None => Box::new(base),
        };
        for (text, t) in args.t.iter().zip(&times) {
            let v = inverter.invert(&mut *f, t, &ctx)?;
            let digits = ctx.decimal_digits() as usize;
            lines.push(format!("{text}\t{method}\t{}", v.to_plain_string(digits)));
        }
    }
    for l in lines {
        println!("{l}");
    }
    Ok(())
}

fn cmd_weights(args: WeightsArgs) -> Result<(), CliError> {
    let (weights, method, terms) = if args.salzer {
        (salzer_weights(args.n)?, Method::SalzerGaver, args.n)
    } else {
        (
            stehfest_weights(args.n)?.weights().to_vec(),
            Method::Stehfest,
            args.n,
        )
    };
    let digits = args
        .digits
        .unwrap_or_else(|| MethodConfig::default_digits(method, terms));
    let ctx = PrecisionContext::new(digits)?;
    for w in &weights {
        let v = Real::from_rational(w, &ctx);
        println!("{w}\t{}", v.to_plain_string(digits as usize));
    }
    Ok(())
}

fn cmd_cases() {
    println!("id\tF(s)\tf(t)\tcategory\tN");
    for c in list_cases() {
        let n = if c.default_stehfest_n == c.noisy_stehfest_n {
            c.default_stehfest_n.to_string()
        } else {
            format!("{}/{}", c.default_stehfest_n, c.noisy_stehfest_n)
        };
        println!(
            "{}\t{}\t{}\t{}\t{n}",
            c.id, c.transform_text, c.exact_text, c.category
        );
    }
}

fn suite_methods(list: &[MethodArg], all: bool) -> Vec<Method> {
    if all {
        Method::ALL.to_vec()
    } else if list.is_empty() {
        Method::TABLE.to_vec()
    } else {
        let mut out: Vec<Method> = Vec::new();
        for &m in list {
            let m = Method::from(m);
            if !out.contains(&m) {
                out.push(m);
            }
        }
        out
    }
}

fn suite_config(opts: &MethodOpts, methods: Vec<Method>, noisy_digits: Option<u32>) -> SuiteConfig {
    SuiteConfig {
        methods,
        seed: opts.seed,
        mode: opts.noise_mode.into(),
        terms: opts.n,
        digits: opts.digits,
        noisy_digits,
        fourier_a: opts.fourier_a,
        ..SuiteConfig::default()
    }
}

fn cmd_bench(args: BenchArgs) -> Result<(), CliError> {
    let mut cfg = suite_config(
        &args.opts,
        suite_methods(&args.method, args.all_methods),
        args.noisy_digits,
    );
    if !args.case.is_empty() {
        cfg.cases = args.case.clone();
    }
    cfg.delta = args.noise;
    cfg.workers = args.workers;
    // validate every cell before spending time on the suite
    for (case, m, noisy) in cfg.cells()? {
        cfg.method_config(case, m, noisy)?;
    }
    cfg.noise_spec(0, Method::Talbot)?;
    let rows = run_suite(&cfg)?;
    match (args.format, args.out) {
        (Format::Csv, None) => print!("{}", emit_csv(&rows)),
        (Format::Csv, Some(path)) => {
            let path = if path.is_dir() {
                path.join("bench.csv")
            } else {
                path
            };
            write_all(&[(path, emit_csv(&rows))])?;
        }
        (Format::Md, None) => {
            let tables = markdown_tables(&rows, &cfg)?;
            let docs: Vec<String> = tables.into_iter().map(|(_, t)| t).collect();
            print!("{}", docs.join("\n"));
        }
        (Format::Md, Some(dir)) => {
            let files: Vec<(PathBuf, String)> = markdown_tables(&rows, &cfg)?
                .into_iter()
                .map(|(id, t)| {
                    let name = case_or_err(id).map(|c| c.name).unwrap_or("case");
                    (dir.join(format!("case{id}_{name}.md")), t)
                })
                .collect();
            write_all(&files)?;
        }
    }
    Ok(())
}

fn cmd_plotdata(args: PlotArgs) -> Result<(), CliError> {
    let mut cfg = suite_config(
        &args.opts,
        suite_methods(&args.method, args.all_methods),
        args.noisy_digits,
    );
    let case = case_or_err(args.case)?;
    cfg.cases = vec![case.id];
    cfg.workers = args.workers;
    if let Some(d) = args.noise {
        cfg.delta = d;
    }
    let data = emit_plot_data(case, &cfg, args.noise.is_some())?;
    match args.out {
        None => print!("{data}"),
        Some(path) => write_all(&[(path, data)])?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Invert(a) => cmd_invert(a),
        Command::Weights(a) => cmd_weights(a),
        Command::Cases => {
            cmd_cases();
            Ok(())
        }
        Command::Bench(a) => cmd_bench(a),
        Command::Plotdata(a) => cmd_plotdata(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let parts: Vec<&str> = msg
                .lines()
                .map(str::trim)
                .take_while(|l| !l.starts_with("Usage:"))
                .filter(|l| !l.is_empty())
                .collect();
            eprintln!("{}", parts.join(" "));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
