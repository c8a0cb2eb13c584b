//! The `awggn` command-line tool: gap tables, capacity and ergodic sweeps,
//! secrecy sweeps, raw samples, and the verification suite, all as CSV.

pub mod commands;
pub mod format;
pub mod grid;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use awggn::sim::{DEFAULT_CHUNKS, DEFAULT_SAMPLES, DEFAULT_SEED};
use awggn::Units;

pub use commands::run;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const NON_CONVERGENCE: i32 = 2;
    pub const VERIFICATION: i32 = 3;
}

#[derive(Debug, Parser)]
#[command(
    name = "awggn",
    version,
    about = "Capacity bounds, secrecy rates and sampling for generalized-Gaussian noise channels"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Seed for every random stream.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Monte-Carlo sample count.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,

    /// Number of independent random streams a sample is split into.
    #[arg(long, global = true, default_value_t = DEFAULT_CHUNKS)]
    pub chunks: usize,

    /// Output units for rates and entropies.
    #[arg(long, global = true, default_value = "bits")]
    pub units: Units,

    /// Output file; `-` or `stdout` writes to standard output.
    #[arg(long, global = true, default_value = "stdout")]
    pub out: OutTarget,

    /// Relative tolerance of the adaptive quadrature.
    #[arg(long, global = true)]
    pub quad_rtol: Option<f64>,

    /// Subdivision budget of the adaptive quadrature.
    #[arg(long, global = true)]
    pub quad_max_subdivisions: Option<usize>,

    /// Worker threads (defaults to the number of cores). Output does not
    /// depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OutTarget {
    Stdout,
    File(PathBuf),
}

impl std::str::FromStr for OutTarget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "" => Err("empty output path".to_string()),
            "-" | "stdout" => Ok(OutTarget::Stdout),
            path => Ok(OutTarget::File(PathBuf::from(path))),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate the gap f(β) between the AWGGN upper bound and AWGN capacity.
    Gap {
        /// Shapes as a comma list; items may be `start:stop:step` ranges.
        #[arg(long, allow_hyphen_values = true)]
        betas: String,
    },
    /// Capacity lower and upper bounds over an SNR sweep.
    Capacity {
        #[arg(long, default_value_t = 2.0)]
        beta: f64,
        /// SNR sweep in dB as `start:stop:step`.
        #[arg(long, default_value = "-10:30:1", allow_hyphen_values = true)]
        snr_db: String,
    },
    /// Ergodic capacity bounds under unit-power α-μ fading.
    Ergodic {
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        #[arg(long, default_value_t = 2.0)]
        alpha: f64,
        #[arg(long, default_value_t = 1.0)]
        mu: f64,
        /// Average SNR sweep in dB as `start:stop:step`.
        #[arg(long, default_value = "-10:30:1", allow_hyphen_values = true)]
        snr_db: String,
    },
    /// Secrecy rate of a wiretap pair over a sweep of the legitimate SNR.
    Secrecy {
        #[arg(long, default_value_t = 2.0)]
        beta_sd: f64,
        #[arg(long, default_value_t = 2.0)]
        beta_se: f64,
        /// Eavesdropper SNR in dB.
        #[arg(long, default_value_t = -5.0, allow_hyphen_values = true)]
        snr_se_db: f64,
        /// Legitimate-link SNR sweep in dB as `start:stop:step`.
        #[arg(long, default_value = "-15:15:0.5", allow_hyphen_values = true)]
        snr_sd_db: String,
        /// Decide the `positive` column with the rule as originally printed
        /// instead of the derived one.
        #[arg(long)]
        as_printed: bool,
    },
    /// Run the numerical verification suite.
    Verify,
    /// Draw raw samples from one of the laws.
    Sample {
        #[command(subcommand)]
        law: SampleLaw,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum SampleLaw {
    /// Generalized-Gaussian noise.
    Gg {
        #[arg(long)]
        beta: f64,
        /// Scale parameter; defaults to the one giving `--variance`.
        #[arg(long, conflicts_with = "variance")]
        scale: Option<f64>,
        #[arg(long, default_value_t = 1.0)]
        variance: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        mean: f64,
    },
    /// α-μ fading envelope.
    AlphaMu {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        mu: f64,
        /// α-root mean; defaults to the unit-power value.
        #[arg(long)]
        h_root: Option<f64>,
    },
}

/// Failure of a CLI invocation, mapped onto an exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("{0}")]
    NonConvergence(awggn::Error),
    #[error("{0} verification check(s) failed")]
    Verification(usize),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => exit::USAGE,
            CliError::NonConvergence(_) => exit::NON_CONVERGENCE,
            CliError::Verification(_) => exit::VERIFICATION,
        }
    }
}

impl From<awggn::Error> for CliError {
    fn from(e: awggn::Error) -> Self {
        match e {
            awggn::Error::Domain(msg) => CliError::Usage(msg),
            e @ awggn::Error::NonConvergence { .. } => CliError::NonConvergence(e),
        }
    }
}
