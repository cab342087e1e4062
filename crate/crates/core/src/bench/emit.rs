use std::fmt::Write as _;

use rayon::prelude::*;

use super::run::{invert_on_grid, SuiteConfig};
use super::ExperimentRow;
use crate::catalog::{case_or_err, TestCase};
use crate::error::Result;
use crate::inverters::Method;
use crate::numkernel::PrecisionContext;

pub const CSV_HEADER: &str =
    "case_id,case_name,method,terms,digits,noise,delta,seed,l2,linf,pct_max,skipped_pct";

/// One line per row, numbers in shortest round-trip scientific notation.
pub fn emit_csv(rows: &[ExperimentRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{:e},{},{:e},{:e},{:e},{}",
            r.case_id,
            r.case_name,
            r.method.name(),
            r.terms,
            r.digits,
            if r.noise_on { "on" } else { "off" },
            r.delta,
            r.seed,
            r.report.l2,
            r.report.linf,
            r.report.pct_max,
            r.report.skipped_pct_points,
        );
    }
    out
}

/// Mantissa(exponent) rendering: `2.0e-6` becomes `2.0(-6)`.
pub fn format_mantissa_exp(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let s = format!("{x:.1e}");
    match s.split_once('e') {
        Some((m, e)) => format!("{m}({e})"),
        None => s,
    }
}

fn methods_in_order(rows: &[&ExperimentRow]) -> Vec<Method> {
    let mut ms: Vec<Method> = Vec::new();
    for r in rows {
        if !ms.contains(&r.method) {
            ms.push(r.method);
        }
    }
    ms
}

fn cell(row: Option<&&ExperimentRow>) -> [String; 3] {
    match row {
        Some(r) => {
            let mut pct = format_mantissa_exp(r.report.pct_max);
            if r.report.skipped_pct_points > 0 {
                let _ = write!(pct, " ({} skipped)", r.report.skipped_pct_points);
            }
            [
                format_mantissa_exp(r.report.l2),
                format_mantissa_exp(r.report.linf),
                pct,
            ]
        }
        None => ["-".into(), "-".into(), "-".into()],
    }
}

fn case_table(case: &TestCase, rows: &[&ExperimentRow], cfg: &SuiteConfig) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Case {}: F(s) = {}, f(t) = {} ({})\n",
        case.id, case.transform_text, case.exact_text, case.category
    );
    out.push_str("| Method | M | No Noise L² | No Noise L∞ | No Noise %error | Noise L² | Noise L∞ | Noise %error |\n");
    out.push_str("|---|---|---|---|---|---|---|---|\n");
    let mut digits = Vec::new();
    for m in methods_in_order(rows) {
        let clean = rows.iter().find(|r| r.method == m && !r.noise_on);
        let noisy = rows.iter().find(|r| r.method == m && r.noise_on);
        let terms = match (clean, noisy) {
            (Some(c), Some(n)) if c.terms != n.terms => format!("{}/{}", c.terms, n.terms),
            (Some(c), _) => c.terms.to_string(),
            (None, Some(n)) => n.terms.to_string(),
            (None, None) => continue,
        };
        let d = match (clean, noisy) {
            (Some(c), Some(n)) if c.digits != n.digits => format!("{}/{}", c.digits, n.digits),
            (Some(c), _) => c.digits.to_string(),
            (None, Some(n)) => n.digits.to_string(),
            (None, None) => unreachable!(),
        };
        digits.push(format!("{} {d}", m.display_name()));
        let [a, b, c] = cell(clean);
        let [x, y, z] = cell(noisy);
        let _ = writeln!(
            out,
            "| {} | {terms} | {a} | {b} | {c} | {x} | {y} | {z} |",
            m.display_name()
        );
    }
    let _ = writeln!(
        out,
        "\nSeed {}, delta = {:e}, noise mode {}, {} grid points. Digits: {}.",
        cfg.seed,
        cfg.delta,
        cfg.mode.name(),
        cfg.grid.len(),
        digits.join(", ")
    );
    out
}

/// One Markdown table per case present in `rows`, in first-seen order.
pub fn markdown_tables(rows: &[ExperimentRow], cfg: &SuiteConfig) -> Result<Vec<(u32, String)>> {
    let mut ids: Vec<u32> = Vec::new();
    for r in rows {
        if !ids.contains(&r.case_id) {
            ids.push(r.case_id);
        }
    }
    ids.into_iter()
        .map(|id| {
            let case = case_or_err(id)?;
            let mine: Vec<&ExperimentRow> = rows.iter().filter(|r| r.case_id == id).collect();
            Ok((id, case_table(case, &mine, cfg)))
        })
        .collect()
}

/// All case tables joined into one document.
pub fn emit_markdown(rows: &[ExperimentRow], cfg: &SuiteConfig) -> Result<String> {
    Ok(markdown_tables(rows, cfg)?
        .into_iter()
        .map(|(_, t)| t)
        .collect::<Vec<_>>()
        .join("\n"))
}

/// Plot columns in fixed order: the three table methods first.
fn plot_order(methods: &[Method]) -> Vec<Method> {
    let order = [
        Method::Stehfest,
        Method::Talbot,
        Method::Fourier,
        Method::Gaver,
        Method::SalzerGaver,
    ];
    order.into_iter().filter(|m| methods.contains(m)).collect()
}

/// Per-t values `t,exact,<method>...` for replotting reconstructions.
pub fn emit_plot_data(case: &TestCase, cfg: &SuiteConfig, noisy: bool) -> Result<String> {
    let methods = plot_order(&cfg.methods);
    let columns = cfg.pool()?.install(|| {
        methods
            .par_iter()
            .map(|&m| {
                let mc = cfg.method_config(case, m, noisy)?;
                let spec = if noisy {
                    Some(cfg.noise_spec(case.id, m)?)
                } else {
                    None
                };
                invert_on_grid(case, &mc, spec.as_ref(), &cfg.grid)
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let ctx = PrecisionContext::new(40)?;
    let mut out = String::from("t,exact");
    for m in &methods {
        out.push(',');
        out.push_str(m.name());
    }
    out.push('\n');
    for (i, t) in cfg.grid.reals(&ctx).iter().enumerate() {
        let exact = case.eval_exact(t, &ctx)?;
        let _ = write!(out, "{:e},{:e}", t.to_f64(), exact.to_f64());
        for col in &columns {
            let _ = write!(out, ",{:e}", col[i].to_f64());
        }
        out.push('\n');
    }
    Ok(out)
}
