//! Run configuration: command-line flags merged over an optional TOML file.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use jsum_core::GeneratorChoice;
use serde::Deserialize;

use crate::error::CliError;

/// Environment variable that overrides the cache directory.
pub const CACHE_ENV: &str = "JSUM_CACHE_DIR";

pub const DEFAULT_Q_MIN: u64 = 3;
pub const DEFAULT_Q_MAX: u64 = 100;
pub const DEFAULT_FERMAT_MAX_M: u64 = 4;
pub const DEFAULT_WUWANG_MAX_Q: u64 = 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    Thm1,
    Thm2,
    Corollary,
    Carlitz,
    Wuwang,
    Sp,
    Fermat,
    Eigen,
    Lemmas,
    SunScan,
}

impl Identity {
    pub const ALL: [Identity; 10] = [
        Identity::Thm1,
        Identity::Thm2,
        Identity::Corollary,
        Identity::Carlitz,
        Identity::Wuwang,
        Identity::Sp,
        Identity::Fermat,
        Identity::Eigen,
        Identity::Lemmas,
        Identity::SunScan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Thm1 => "thm1",
            Identity::Thm2 => "thm2",
            Identity::Corollary => "corollary",
            Identity::Carlitz => "carlitz",
            Identity::Wuwang => "wuwang",
            Identity::Sp => "sp",
            Identity::Fermat => "fermat",
            Identity::Eigen => "eigen",
            Identity::Lemmas => "lemmas",
            Identity::SunScan => "sun-scan",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DPolicy {
    /// Only `d = g`, the generator.
    #[default]
    OneNonsquare,
    AllNonsquares,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

/// Flags shared by `verify` and `scan`.
#[derive(Args, Debug, Clone, Default)]
pub struct SweepArgs {
    /// Smallest q (or p, m, s) to include.
    #[arg(long)]
    pub q_min: Option<u64>,
    /// Largest q (or p, m, s) to include [default: 100].
    #[arg(long)]
    pub q_max: Option<u64>,
    /// Comma-separated identities to run [default: all].
    #[arg(long, value_enum, value_delimiter = ',')]
    pub identities: Option<Vec<Identity>>,
    #[arg(long, value_enum)]
    pub d_policy: Option<DPolicy>,
    /// `least`, `nth:K` or an element index.
    #[arg(long)]
    pub generator: Option<GeneratorChoice>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads [default: available cores].
    #[arg(long)]
    pub parallelism: Option<usize>,
    /// Recompute even when a cached pass exists.
    #[arg(long)]
    pub force: bool,
    /// Report elapsed_ms as 0 so repeated runs are byte-identical.
    #[arg(long)]
    pub no_timing: bool,
    /// Largest m for the Fermat-curve identity [default: 4].
    #[arg(long)]
    pub fermat_max_m: Option<u64>,
    /// Largest q for the Wu–Wang determinant sweep [default: 31].
    #[arg(long)]
    pub wuwang_max_q: Option<u64>,
    /// TOML file with any of the keys above (snake_case); flags win.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    q_min: Option<u64>,
    q_max: Option<u64>,
    identities: Option<Vec<Identity>>,
    d_policy: Option<DPolicy>,
    generator: Option<String>,
    format: Option<OutputFormat>,
    cache_dir: Option<PathBuf>,
    parallelism: Option<usize>,
    force: Option<bool>,
    no_timing: Option<bool>,
    fermat_max_m: Option<u64>,
    wuwang_max_q: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub q_min: u64,
    pub q_max: u64,
    pub identities: Vec<Identity>,
    pub d_policy: DPolicy,
    pub generator: GeneratorChoice,
    pub format: OutputFormat,
    pub cache_dir: Option<PathBuf>,
    pub parallelism: usize,
    pub force: bool,
    pub timing: bool,
    pub fermat_max_m: u64,
    pub wuwang_max_q: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            q_min: DEFAULT_Q_MIN,
            q_max: DEFAULT_Q_MAX,
            identities: Identity::ALL.to_vec(),
            d_policy: DPolicy::default(),
            generator: GeneratorChoice::Least,
            format: OutputFormat::default(),
            cache_dir: None,
            parallelism: 1,
            force: false,
            timing: true,
            fermat_max_m: DEFAULT_FERMAT_MAX_M,
            wuwang_max_q: DEFAULT_WUWANG_MAX_Q,
        }
    }
}

fn read_config_file(path: &Path) -> Result<ConfigFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    toml::from_str(&text)
        .map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))
}

impl RunConfig {
    /// Resolves flags, then the config file, then defaults. The cache
    /// directory environment variable takes precedence over both.
    pub fn resolve(args: &SweepArgs, env_cache: Option<PathBuf>) -> Result<Self, CliError> {
        let file = match &args.config {
            Some(path) => read_config_file(path)?,
            None => ConfigFile::default(),
        };
        let file_generator = match file.generator {
            Some(s) => Some(s.parse::<GeneratorChoice>().map_err(CliError::Usage)?),
            None => None,
        };
        let defaults = RunConfig::default();
        let mut identities = args
            .identities
            .clone()
            .or(file.identities)
            .unwrap_or(defaults.identities);
        identities.sort();
        identities.dedup();
        let config = RunConfig {
            q_min: args.q_min.or(file.q_min).unwrap_or(defaults.q_min),
            q_max: args.q_max.or(file.q_max).unwrap_or(defaults.q_max),
            identities,
            d_policy: args.d_policy.or(file.d_policy).unwrap_or_default(),
            generator: args.generator.or(file_generator).unwrap_or_default(),
            format: args.format.or(file.format).unwrap_or_default(),
            cache_dir: env_cache
                .or_else(|| args.cache_dir.clone())
                .or(file.cache_dir),
            parallelism: args
                .parallelism
                .or(file.parallelism)
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())),
            force: args.force || file.force.unwrap_or(false),
            timing: !(args.no_timing || file.no_timing.unwrap_or(false)),
            fermat_max_m: args
                .fermat_max_m
                .or(file.fermat_max_m)
                .unwrap_or(defaults.fermat_max_m),
            wuwang_max_q: args
                .wuwang_max_q
                .or(file.wuwang_max_q)
                .unwrap_or(defaults.wuwang_max_q),
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.q_min > self.q_max {
            return Err(CliError::Usage(format!(
                "q_min = {} exceeds q_max = {}",
                self.q_min, self.q_max
            )));
        }
        if self.parallelism == 0 {
            return Err(CliError::Usage("parallelism must be at least 1".into()));
        }
        if self.identities.is_empty() {
            return Err(CliError::Usage("no identities selected".into()));
        }
        Ok(())
    }
}

/// The cache directory from the environment, if set and non-empty.
pub fn env_cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}
