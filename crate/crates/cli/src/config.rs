use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, ValueEnum};
use minorfree::asymptotics::tower::Route;
use minorfree::class::{Connectivity, GraphClass};
use rug::Rational;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

/// A rational given on the command line as `p` or `p/q`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalArg(pub Rational);

impl FromStr for RationalArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        s.trim().parse::<Rational>().map(RationalArg).map_err(|e| format!("{s:?} is not a rational number: {e}"))
    }
}

impl fmt::Display for RationalArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Flags shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Graph class: k33, k33plus or maximal.
    #[arg(long, default_value = "k33")]
    pub class: GraphClass,
    /// all (alias any), connected or biconnected.
    #[arg(long, default_value = "all")]
    pub connectivity: Connectivity,
    /// Largest number of vertices to report or verify.
    #[arg(long, default_value_t = 7)]
    pub max_n: usize,
    /// Truncation order of the series; at least max-n.
    #[arg(long)]
    pub series_order: Option<usize>,
    /// Working precision in bits for the numeric constants.
    #[arg(long = "precision", default_value_t = 256)]
    pub precision_bits: u32,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
    /// Write the output to this file instead of stdout.
    #[arg(long = "out")]
    pub output_path: Option<PathBuf>,
    /// Worker threads for the brute-force oracle.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Value of the K5 marker.
    #[arg(long, default_value = "1")]
    pub q: RationalArg,
    /// Allow the oracle to enumerate graphs on 8 vertices.
    #[arg(long)]
    pub allow_n8: bool,
    /// How the tower singularity is expanded: expansion or closed-form.
    #[arg(long, default_value = "expansion")]
    pub route: Route,
}

/// Validated settings for one run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub class: GraphClass,
    pub connectivity: Connectivity,
    pub max_n: usize,
    pub series_order: usize,
    pub precision_bits: u32,
    pub jobs: Option<usize>,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
    pub q: Rational,
    pub allow_n8: bool,
    pub route: Route,
}

impl RunConfig {
    /// `default_order` is used when `--series-order` is absent.
    pub fn from_args(args: &CommonArgs, default_order: usize) -> Result<Self, CliError> {
        let series_order = args.series_order.unwrap_or(default_order.max(args.max_n));
        if series_order < args.max_n {
            return Err(CliError::Config(format!(
                "--series-order {series_order} is smaller than --max-n {}",
                args.max_n
            )));
        }
        if args.precision_bits < 64 {
            return Err(CliError::Config(format!("--precision must be at least 64 bits, got {}", args.precision_bits)));
        }
        if args.jobs == Some(0) {
            return Err(CliError::Config("--jobs must be at least 1".into()));
        }
        Ok(RunConfig {
            class: args.class,
            connectivity: args.connectivity,
            max_n: args.max_n,
            series_order,
            precision_bits: args.precision_bits,
            jobs: args.jobs,
            output_format: args.format,
            output_path: args.output_path.clone(),
            q: args.q.0.clone(),
            allow_n8: args.allow_n8,
            route: args.route,
        })
    }

    pub fn q_is_one(&self) -> bool {
        self.q == 1
    }
}

#[cfg(test)]
mod tests {
    use clap::Parser;

    use super::*;

    #[derive(Parser)]
    struct Wrapper {
        #[command(flatten)]
        common: CommonArgs,
    }

    fn parse(args: &[&str]) -> CommonArgs {
        Wrapper::try_parse_from(std::iter::once("x").chain(args.iter().copied())).unwrap().common
    }

    #[test]
    fn defaults() {
        let c = RunConfig::from_args(&parse(&[]), 0).unwrap();
        assert_eq!((c.class, c.max_n, c.series_order, c.precision_bits), (GraphClass::K33, 7, 7, 256));
        assert!(c.q_is_one());
    }

    #[test]
    fn validation() {
        assert!(RunConfig::from_args(&parse(&["--max-n", "10", "--series-order", "5"]), 0).is_err());
        assert!(RunConfig::from_args(&parse(&["--precision", "32"]), 0).is_err());
        assert!(RunConfig::from_args(&parse(&["--jobs", "0"]), 0).is_err());
        let c = RunConfig::from_args(&parse(&["--q", "1/2", "--connectivity", "any"]), 30).unwrap();
        assert_eq!(c.q, Rational::from((1, 2)));
        assert_eq!(c.connectivity, Connectivity::All);
        assert_eq!(c.series_order, 30);
    }
}
