//! `verify`: generating-function counts against the brute-force oracle, and
//! the exact series identities.

use minorfree::class::{GraphClass, Markers};
use minorfree::maximal::{MaximalIdentities, MaximalPipeline};
use minorfree::oracle::{count_all, OracleCounts};
use minorfree::series::MarkerPoly;
use minorfree::tower::{b_derivative_residual, build_b, solve_d, MinorFreeTower};
use rug::{Integer, Rational};
use serde::{Deserialize, Serialize};

use crate::config::{OutputFormat, RunConfig};
use crate::output::to_json;
use crate::CliError;

/// Default order of the bivariate identity checks.
pub const IDENTITY_ORDER: usize = 30;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub checks: Vec<Check>,
}

/// Deliberate corruption of one count, to show that the harness notices.
#[derive(Debug, Clone, Copy)]
pub struct Fault {
    pub class: GraphClass,
    pub n: usize,
}

fn oracle_counts(config: &RunConfig, n: usize, class: GraphClass) -> Result<OracleCounts, CliError> {
    match config.jobs {
        None => Ok(count_all(n, class, config.allow_n8)?),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| CliError::Config(format!("cannot start {j} worker threads: {e}")))?;
            Ok(pool.install(|| count_all(n, class, config.allow_n8))?)
        }
    }
}

fn oracle_checks(config: &RunConfig, fault: Option<Fault>) -> Result<Vec<Check>, CliError> {
    let n_max = config.max_n;
    let maximal = MaximalPipeline::<Rational>::build(&Rational::from(1), n_max.max(3))?.counts()?;
    let mut checks = Vec::new();
    for class in [GraphClass::K33, GraphClass::K33Plus] {
        let tower = MinorFreeTower::<Rational>::build(class, Markers::unit(), n_max.max(3))?;
        let mut g = tower.all_counts()?;
        let (c, b) = (tower.connected_counts()?, tower.biconnected_counts()?);
        if let Some(f) = fault.filter(|f| f.class == class && f.n < g.len()) {
            g[f.n] += 1;
        }
        for n in 3..=n_max {
            let o = oracle_counts(config, n, class)?;
            let mut pairs: Vec<(&str, &Integer, u64)> = vec![("g", &g[n], o.g), ("c", &c[n], o.c), ("b", &b[n], o.b)];
            if let Some(m) = o.m {
                pairs.push(("m", &maximal[n], m));
            }
            let bad: Vec<String> = pairs
                .iter()
                .filter(|(_, s, o)| **s != *o)
                .map(|(k, s, o)| format!("{k}: series {s}, oracle {o}"))
                .collect();
            let values: Vec<String> = pairs.iter().map(|(k, _, o)| format!("{k}={o}")).collect();
            checks.push(Check {
                name: format!("oracle {class} n={n}"),
                pass: bad.is_empty(),
                detail: if bad.is_empty() { values.join(" ") } else { bad.join("; ") },
            });
        }
    }
    Ok(checks)
}

fn identity(name: &str, zero: bool) -> Check {
    Check {
        name: name.into(),
        pass: zero,
        detail: if zero { "residual 0".into() } else { "residual has nonzero coefficients".into() },
    }
}

/// `g_n = sum_k C(n-1, k-1) c_k g_{n-k}` on the extracted integers.
fn exponential_formula_holds(c: &[Integer], g: &[Integer]) -> Option<usize> {
    (1..c.len()).find(|&n| {
        let mut binom = Integer::from(1);
        let mut sum = Integer::new();
        for k in 1..=n {
            sum += Integer::from(&binom * &c[k]) * &g[n - k];
            binom = binom * (n - k) as u32 / k as u32;
        }
        sum != g[n]
    })
}

fn identity_checks(order: usize) -> Result<Vec<Check>, CliError> {
    let ids = MaximalIdentities::compute(order)?;
    let mut checks = vec![
        identity("rooting: (2/x^2) y dA/dy = H + F", ids.rooting.is_zero()),
        identity("H = T0(x, F)", ids.h_is_t0.is_zero()),
        identity("derivative of T0", ids.t0_derivative.is_zero()),
        identity("H from L", ids.h_from_l.is_zero()),
        identity("parametrization lambda (1 - lambda)^3 = x xi^3", ids.parametrization),
        identity("psi(F) = y", ids.psi_inverse.is_zero()),
    ];
    for class in [GraphClass::K33, GraphClass::K33Plus] {
        let markers = Markers::<MarkerPoly>::edges_only(&Rational::from(1));
        let net = solve_d(class, &markers, order)?;
        let b = build_b(class, &markers, &net)?;
        let residual = b_derivative_residual(&markers, &net, &b)?;
        checks.push(identity(&format!("{class}: dB/dy = x^2 (1 + D) / (2 (1 + y))"), residual.is_zero()));
        let tower = MinorFreeTower::<Rational>::build(class, Markers::unit(), order)?;
        let bad = exponential_formula_holds(&tower.connected_counts()?, &tower.all_counts()?);
        checks.push(Check {
            name: format!("{class}: G = exp(C) on counts"),
            pass: bad.is_none(),
            detail: bad.map_or_else(|| format!("holds for n <= {order}"), |n| format!("fails at n = {n}")),
        });
    }
    Ok(checks)
}

pub fn run_verify(config: &RunConfig, fault: Option<Fault>) -> Result<VerifyReport, CliError> {
    let max = if config.allow_n8 { 8 } else { 7 };
    if config.max_n > max {
        return Err(CliError::Config(format!("--max-n {} needs --allow-n8 (limit {max})", config.max_n)));
    }
    let mut checks = oracle_checks(config, fault)?;
    checks.extend(identity_checks(config.series_order)?);
    Ok(VerifyReport { passed: checks.iter().all(|c| c.pass), checks })
}

pub fn render(report: &VerifyReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(report),
        OutputFormat::Csv => {
            let mut out = String::from("check,status,detail\n");
            for c in &report.checks {
                out.push_str(&format!("\"{}\",{},\"{}\"\n", c.name, status(c.pass), c.detail));
            }
            out
        }
        OutputFormat::Table => {
            let w = report.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            let mut out = String::new();
            for c in &report.checks {
                out.push_str(&format!("{}  {:<w$}  {}\n", status(c.pass), c.name, c.detail));
            }
            let failed = report.checks.iter().filter(|c| !c.pass).count();
            out.push_str(&format!("{} checks, {failed} failed\n", report.checks.len()));
            out
        }
    }
}

fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}
