//! Front end of the `mevac` binary.
//!
//! ```text
//! mevac transform     <CONFIG> [--beta B] [--format csv|json]
//! mevac expand-check  <CONFIG> [--beta-grid b1,b2,...] [--format csv|json]
//! mevac velocity      <CONFIG> [--cutoff L] [--format csv|json]
//! mevac vacuum-sweep  <CONFIG> [--format csv|json]
//! ```
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 2 configuration error, 3 degenerate boost (`1 + nβ ≤ 0`), 4 failed
//! expansion check, 5 empty vacuum mode set.

pub mod commands;
pub mod config;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::lagrangian::DEFAULT_BETA_GRID;
use config::{ConfigError, RunConfig};
use output::Format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_DEGENERATE_BOOST: i32 = 3;
pub const EXIT_VERIFICATION: i32 = 4;
pub const EXIT_EMPTY_MODE_SET: i32 = 5;

/// A run that ends with a non-zero exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn config(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_CONFIG,
            message: message.into(),
        }
    }

    pub fn degenerate_boost(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_DEGENERATE_BOOST,
            message: message.into(),
        }
    }

    pub fn verification(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_VERIFICATION,
            message: message.into(),
        }
    }

    pub fn empty_mode_set(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_EMPTY_MODE_SET,
            message: message.into(),
        }
    }
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::config(e.0)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "mevac",
    version,
    about = "Momentum of moving magnetoelectric media"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// TOML run configuration
    config: PathBuf,
    /// Output format
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Override boost.beta
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
    /// Override vacuum.cutoff (rad/cm)
    #[arg(long)]
    cutoff: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lab-frame permittivity and permeability of the moving medium
    Transform(Common),
    /// Verify the first-order expansion of the interaction density
    ExpandCheck {
        #[command(flatten)]
        common: Common,
        /// Comma-separated boosts in (0, 0.1], ascending
        #[arg(long, value_delimiter = ',')]
        beta_grid: Option<Vec<f64>>,
    },
    /// Medium velocity with per-term attribution
    Velocity(Common),
    /// Zero-point bilinears over a cutoff, grid or volume sweep
    VacuumSweep(Common),
}

fn load(common: &Common) -> Result<RunConfig, Failure> {
    let mut cfg = RunConfig::load(&common.config)?;
    cfg.apply_overrides(common.beta, common.cutoff)?;
    Ok(cfg)
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let (common, result) = match &cli.command {
        Command::Transform(c) => (c, load(c).and_then(|cfg| commands::transform(&cfg))),
        Command::ExpandCheck { common, beta_grid } => {
            let grid = beta_grid
                .clone()
                .unwrap_or_else(|| DEFAULT_BETA_GRID.to_vec());
            (
                common,
                load(common).and_then(|cfg| commands::expand_check(&cfg, &grid)),
            )
        }
        Command::Velocity(c) => (c, load(c).and_then(|cfg| commands::velocity(&cfg))),
        Command::VacuumSweep(c) => (c, load(c).and_then(|cfg| commands::vacuum_sweep(&cfg))),
    };
    match result {
        Ok(outcome) => {
            for w in &outcome.warnings {
                let _ = writeln!(stderr, "{w}");
            }
            if let Err(e) = outcome.table.write(common.format, stdout) {
                let _ = writeln!(stderr, "error: writing output: {e}");
                return EXIT_CONFIG;
            }
            match outcome.failure {
                Some(f) => {
                    let _ = writeln!(stderr, "error: {}", f.message);
                    f.code
                }
                None => EXIT_OK,
            }
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
