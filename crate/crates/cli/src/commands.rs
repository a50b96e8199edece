use minorfree::asymptotics::limit::{limit_law, Stat};
use minorfree::asymptotics::maximal::solve_maximal_singularity;
use minorfree::asymptotics::tower::solve_tower_singularity;
use minorfree::class::{Connectivity, GraphClass, Markers};
use minorfree::maximal::{build_theta_and_t, t0_of, MaximalPipeline};
use minorfree::series::RationalSeries;
use minorfree::tower::{m_of, MinorFreeTower};
use rug::{Float, Integer, Rational};
use serde::{Deserialize, Serialize};

use crate::config::{OutputFormat, RunConfig};
use crate::output::{float_string, rational_string, to_json, two_columns};
use crate::CliError;

/// `n! [x^n]` of a series at `y = 1`, for `n = 0..=order`. With the K5
/// marker at a non-integer value these are weighted counts, not integers.
fn weighted_counts(s: &RationalSeries, require_integers: bool) -> Result<Vec<Rational>, CliError> {
    if require_integers {
        return Ok(s.extract_counts()?.into_iter().map(Rational::from).collect());
    }
    let mut fact = Integer::from(1);
    Ok(s.coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| {
            if n > 0 {
                fact *= n as u32;
            }
            Rational::from(c * &fact)
        })
        .collect())
}

fn tower(config: &RunConfig, order: usize) -> Result<MinorFreeTower<Rational>, CliError> {
    Ok(MinorFreeTower::build(config.class, Markers::with_q(config.q.clone()), order)?)
}

/// Counts for the configured class, from the generating functions.
pub fn class_counts(config: &RunConfig, order: usize) -> Result<Vec<Rational>, CliError> {
    let integral = config.q.denom() == &1 && config.q >= 0;
    match config.class {
        GraphClass::Maximal => {
            let a = MaximalPipeline::<Rational>::build(&Rational::from(1), order)?.a;
            weighted_counts(&a, true)
        }
        _ => {
            let t = tower(config, order)?;
            let series = match config.connectivity {
                Connectivity::All => &t.g,
                Connectivity::Connected => &t.c,
                Connectivity::Biconnected => &t.b,
            };
            weighted_counts(series, integral)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountRow {
    pub n: usize,
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountReport {
    pub class: GraphClass,
    pub connectivity: Connectivity,
    pub q: String,
    pub counts: Vec<CountRow>,
}

pub fn cmd_count(config: &RunConfig) -> Result<String, CliError> {
    let counts = class_counts(config, config.series_order)?;
    let rows: Vec<(usize, String)> = (1..=config.max_n).map(|n| (n, rational_string(&counts[n]))).collect();
    Ok(match config.output_format {
        OutputFormat::Json => to_json(&CountReport {
            class: config.class,
            connectivity: config.connectivity,
            q: rational_string(&config.q),
            counts: rows.into_iter().map(|(n, count)| CountRow { n, count }).collect(),
        }),
        f => two_columns(["n", "count"], &rows, f),
    })
}

/// Everything `constants` reports. Absent keys do not apply to the class.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ConstantsReport {
    pub class: Option<GraphClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho_inv: Option<String>,
    #[serde(rename = "R_inv", skip_serializing_if = "Option::is_none")]
    pub r_inv: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_all: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_connected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_biconnected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa_edges: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_edges: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa_k5: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_k5: Option<String>,
    pub precision_bits: u32,
}

impl ConstantsReport {
    fn rows(&self) -> Vec<(&'static str, &String)> {
        [
            ("rho_inv", &self.rho_inv),
            ("R_inv", &self.r_inv),
            ("alpha_all", &self.alpha_all),
            ("alpha_connected", &self.alpha_connected),
            ("alpha_biconnected", &self.alpha_biconnected),
            ("gamma", &self.gamma),
            ("a", &self.a),
            ("kappa_edges", &self.kappa_edges),
            ("lambda_edges", &self.lambda_edges),
            ("kappa_k5", &self.kappa_k5),
            ("lambda_k5", &self.lambda_k5),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.as_ref().map(|v| (k, v)))
        .collect()
    }
}

pub fn compute_constants(config: &RunConfig) -> Result<ConstantsReport, CliError> {
    let p = config.precision_bits;
    let s = |x: &Float| Some(float_string(x, p));
    let mut report = ConstantsReport { class: Some(config.class), precision_bits: p, ..Default::default() };
    if config.class == GraphClass::Maximal {
        let m = solve_maximal_singularity(p)?;
        report.rho_inv = s(&(Float::with_val(p, 1) / &m.rho));
        report.gamma = s(&m.gamma);
        report.a = s(&m.a);
        return Ok(report);
    }
    let q = Float::with_val(p, &config.q);
    let d = solve_tower_singularity(config.class, &q, &Float::with_val(p, 1), p, config.route)?;
    report.rho_inv = s(&d.rho_inv());
    report.r_inv = s(&d.r_inv());
    report.alpha_all = s(&d.alpha_g());
    report.alpha_connected = s(&d.alpha_c());
    report.alpha_biconnected = s(&d.alpha_b());
    // the limit laws are taken around q = 1
    if config.q_is_one() {
        let edges = limit_law(config.class, Stat::Edges, p, config.route)?;
        let k5 = limit_law(config.class, Stat::K5Count, p, config.route)?;
        report.kappa_edges = s(&edges.kappa);
        report.lambda_edges = s(&edges.lambda);
        report.kappa_k5 = s(&k5.kappa);
        report.lambda_k5 = s(&k5.lambda);
    }
    Ok(report)
}

pub fn cmd_constants(config: &RunConfig) -> Result<String, CliError> {
    let report = compute_constants(config)?;
    Ok(match config.output_format {
        OutputFormat::Json => to_json(&report),
        OutputFormat::Csv => {
            let mut out = String::from("name,value\n");
            for (k, v) in report.rows() {
                out.push_str(&format!("{k},{v}\n"));
            }
            out.push_str(&format!("precision_bits,{}\n", report.precision_bits));
            out
        }
        OutputFormat::Table => {
            let mut out = format!("class: {}\n", config.class);
            for (k, v) in report.rows() {
                out.push_str(&format!("{k:<18} {v}\n"));
            }
            out.push_str(&format!("{:<18} {}\n", "precision_bits", report.precision_bits));
            out
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfName {
    Theta,
    T,
    T0,
    F,
    H,
    A,
    M,
    D,
    B,
    Cdot,
    C,
    G,
}

impl GfName {
    pub const ALL: [GfName; 12] = [
        GfName::Theta,
        GfName::T,
        GfName::T0,
        GfName::F,
        GfName::H,
        GfName::A,
        GfName::M,
        GfName::D,
        GfName::B,
        GfName::Cdot,
        GfName::C,
        GfName::G,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GfName::Theta => "theta",
            GfName::T => "t",
            GfName::T0 => "T0",
            GfName::F => "F",
            GfName::H => "H",
            GfName::A => "A",
            GfName::M => "M",
            GfName::D => "D",
            GfName::B => "B",
            GfName::Cdot => "Cdot",
            GfName::C => "C",
            GfName::G => "G",
        }
    }
}

impl std::str::FromStr for GfName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        GfName::ALL.into_iter().find(|g| g.name() == s).ok_or_else(|| {
            let names: Vec<_> = GfName::ALL.iter().map(|g| g.name()).collect();
            format!("unknown series {s:?}, expected one of {}", names.join(", "))
        })
    }
}

/// The series at `y = 1`. The triangulation and maximal-class series ignore
/// the class; the tower series use it together with the K5 marker.
pub fn series_of(gf: GfName, config: &RunConfig, order: usize) -> Result<RationalSeries, CliError> {
    let one = Rational::from(1);
    let maximal = || MaximalPipeline::<Rational>::build(&one, order);
    let tower_class = || match config.class {
        GraphClass::Maximal => Err(CliError::Config(format!("series {} needs --class k33 or k33plus", gf.name()))),
        _ => tower(config, order),
    };
    Ok(match gf {
        GfName::Theta => build_theta_and_t(order.max(3))?.0.truncate(order),
        GfName::T => build_theta_and_t(order.max(3))?.1.truncate(order),
        GfName::T0 => {
            let m = maximal()?;
            t0_of(&m.theta, &m.f)?
        }
        GfName::F => maximal()?.f,
        GfName::H => maximal()?.h,
        GfName::A => maximal()?.a,
        GfName::M => m_of(&tower_class()?.networks.d)?,
        GfName::D => tower_class()?.networks.d,
        GfName::B => tower_class()?.b,
        GfName::Cdot => tower_class()?.cdot,
        GfName::C => tower_class()?.c,
        GfName::G => tower_class()?.g,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub gf: String,
    pub order: usize,
    /// `[x^k]` for `k = 0..=order`, as exact `num/den` strings.
    pub coefficients: Vec<String>,
}

pub fn cmd_series(config: &RunConfig, gf: GfName, order: usize) -> Result<String, CliError> {
    let s = series_of(gf, config, order)?;
    let coefficients: Vec<String> = s.coeffs().iter().map(rational_string).collect();
    Ok(match config.output_format {
        OutputFormat::Json => to_json(&SeriesReport { gf: gf.name().into(), order, coefficients }),
        f => {
            let rows: Vec<_> = coefficients.into_iter().enumerate().collect();
            two_columns(["k", "coeff"], &rows, f)
        }
    })
}
