//! Run configuration: command-line flags merged over an optional TOML file
//! with the same keys (flags win).

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::error::{CliError, CliResult};

/// Largest `n` accepted without `--allow-large`.
pub const MAX_N: usize = 8;
/// Largest `r` accepted without `--allow-large`.
pub const MAX_R: usize = 4;

#[derive(Debug, Parser)]
#[command(
    name = "hlkostka",
    version,
    about = "Multi-parameter Hall-Littlewood and Kostka functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a Kostka table K±(t) for all r-partitions of n.
    Table(TableArgs),
    /// Run a verification suite and print a machine-readable report.
    Verify(VerifyArgs),
    /// Substitute parameters in an existing table file.
    Specialize(SpecializeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignArg {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodArg {
    Solve,
    Pf,
    GramSchmidt,
    Raising,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormatArg {
    Json,
    Csv,
}

/// Options shared by every command.
#[derive(Debug, Args, Clone, Default)]
pub struct Common {
    /// TOML file with default values for any of the flags.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output file (default: standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    /// Worker threads (default: available cores).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Directory for cached tables.
    #[arg(long, env = "KOSTKA_CACHE")]
    pub cache_dir: Option<PathBuf>,
    /// Accept n > 8 or r > 4 (runtime grows quickly).
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args, Clone)]
pub struct TableArgs {
    #[command(flatten)]
    pub common: Common,
    /// Size of the r-partitions.
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of components.
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, value_enum)]
    pub sign: Option<SignArg>,
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    /// Rows per component for the partition-function method (at least n).
    #[arg(long)]
    pub m: Option<usize>,
    /// Parameter values, e.g. "t1=t,t2=t"; computed from scratch.
    #[arg(long)]
    pub params: Option<String>,
}

#[derive(Debug, Args, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    /// Suite name, or "all".
    #[arg(long)]
    pub suite: Option<String>,
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Number of components for single-r checks.
    #[arg(long)]
    pub r: Option<usize>,
    /// Largest number of components for sweeps.
    #[arg(long)]
    pub r_max: Option<usize>,
    /// Random samples for sampled checks.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args, Clone)]
pub struct SpecializeArgs {
    #[command(flatten)]
    pub common: Common,
    /// Table file to read.
    #[arg(long)]
    pub input: PathBuf,
    /// Parameter values, e.g. "t1=t,t2=t".
    #[arg(long)]
    pub params: Option<String>,
    /// Keep only pairs whose first A components are empty and drop those
    /// components.
    #[arg(long, value_name = "A")]
    pub reduce: Option<usize>,
}

/// Keys accepted in the configuration file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub sign: Option<SignArg>,
    pub method: Option<MethodArg>,
    pub m: Option<usize>,
    pub params: Option<String>,
    pub format: Option<FormatArg>,
    pub out: Option<PathBuf>,
    pub suite: Option<String>,
    pub n_max: Option<usize>,
    pub r_max: Option<usize>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub jobs: Option<usize>,
    pub cache_dir: Option<PathBuf>,
    pub allow_large: Option<bool>,
}

impl FileConfig {
    /// Reads the file named by `--config`, or the empty configuration.
    pub fn load(path: Option<&Path>) -> CliResult<Self> {
        let Some(path) = path else {
            return Ok(FileConfig::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(CliError::io(format!("reading {}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }
}

/// Settings common to all commands after merging.
#[derive(Debug, Clone)]
pub struct Output {
    pub out: Option<PathBuf>,
    pub format: FormatArg,
    pub jobs: Option<usize>,
    pub cache_dir: Option<PathBuf>,
    pub allow_large: bool,
}

impl Output {
    pub fn merge(c: &Common, f: &FileConfig) -> Self {
        Output {
            out: c.out.clone().or_else(|| f.out.clone()),
            format: c.format.or(f.format).unwrap_or(FormatArg::Json),
            jobs: c.jobs.or(f.jobs),
            cache_dir: c.cache_dir.clone().or_else(|| f.cache_dir.clone()),
            allow_large: c.allow_large || f.allow_large.unwrap_or(false),
        }
    }

    /// Rejects sizes beyond the default bounds unless explicitly allowed.
    pub fn check_bounds(&self, n: usize, r: usize) -> CliResult<()> {
        if n == 0 || r == 0 {
            return Err(CliError::Usage(format!(
                "n and r must be at least 1 (got n = {n}, r = {r})"
            )));
        }
        if !self.allow_large && (n > MAX_N || r > MAX_R) {
            return Err(CliError::Usage(format!(
                "n = {n}, r = {r} exceeds the default bounds n <= {MAX_N}, r <= {MAX_R}; pass --allow-large to proceed"
            )));
        }
        Ok(())
    }
}
