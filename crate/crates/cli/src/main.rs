//! Command-line front end for the `minorfree` enumeration engine.

mod commands;
mod config;
mod output;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::GfName;
use config::{CommonArgs, RunConfig};
use verify::Fault;

#[derive(Parser, Debug)]
#[command(name = "minorfree", version, about = "Counts and asymptotics of K33-minor-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Labelled counts for n = 1..=max-n from the generating functions.
    Count {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Growth constants, singular coefficients and limit-law constants.
    Constants {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Checks the series against the brute-force oracle and the exact identities.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// Adds one to g_n of the K33 class at n = max-n before comparing.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Dumps the coefficients of one generating function.
    Series {
        #[command(flatten)]
        common: CommonArgs,
        /// One of theta, t, T0, F, H, A, M, D, B, Cdot, C, G.
        #[arg(long)]
        gf: GfName,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
}

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Numeric(String),
    Pipeline(String),
    Io(std::io::Error),
}

impl From<minorfree::Error> for CliError {
    fn from(e: minorfree::Error) -> Self {
        use minorfree::Error as E;
        match e {
            E::Config(_) | E::TooLarge { .. } => CliError::Config(e.to_string()),
            E::NoConvergence { .. }
            | E::NoRootInBracket { .. }
            | E::AmbiguousRoot { .. }
            | E::NegativeRadicand { .. } => CliError::Numeric(e.to_string()),
            _ => CliError::Pipeline(e.to_string()),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Numeric(_) | CliError::Pipeline(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Numeric(m) => write!(f, "numeric error: {m}"),
            CliError::Pipeline(m) => write!(f, "pipeline error: {m}"),
            CliError::Io(e) => write!(f, "cannot write output: {e}"),
        }
    }
}

/// Runs one command and returns its text together with the exit code.
fn run(command: Command) -> Result<(String, RunConfig, u8), CliError> {
    Ok(match command {
        Command::Count { common } => {
            let config = RunConfig::from_args(&common, common.max_n)?;
            (commands::cmd_count(&config)?, config, 0)
        }
        Command::Constants { common } => {
            let config = RunConfig::from_args(&common, common.max_n)?;
            (commands::cmd_constants(&config)?, config, 0)
        }
        Command::Verify { common, inject_fault } => {
            let config = RunConfig::from_args(&common, verify::IDENTITY_ORDER)?;
            let fault = inject_fault.then_some(Fault { class: minorfree::class::GraphClass::K33, n: config.max_n });
            let report = verify::run_verify(&config, fault)?;
            let code = if report.passed { 0 } else { 1 };
            (verify::render(&report, config.output_format), config, code)
        }
        Command::Series { common, gf, order } => {
            let config = RunConfig::from_args(&common, order)?;
            (commands::cmd_series(&config, gf, order)?, config, 0)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command).and_then(|(text, config, code)| {
        output::emit(&text, config.output_path.as_deref()).map_err(CliError::Io)?;
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("minorfree: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
