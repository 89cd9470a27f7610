use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::fourbar::SolveMode;

#[derive(Debug, Parser)]
#[command(
    name = "mink4r",
    version,
    about = "Position analysis of the Minkowskian planar 4R linkage"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Input crank length (overrides the config)
    #[arg(long, global = true)]
    pub a: Option<f64>,
    /// Output crank length
    #[arg(long, global = true)]
    pub b: Option<f64>,
    /// Ground link length
    #[arg(long, global = true)]
    pub g: Option<f64>,
    /// Coupler length
    #[arg(long, global = true)]
    pub h: Option<f64>,
    /// JSON job file
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub mode: Option<ModeArg>,
    /// Relative zero band for sign tests [default: 1e-9]
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Machine-readable JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Output file (stdout when absent)
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Strict,
    Extended,
}

impl From<ModeArg> for SolveMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Strict => SolveMode::Strict,
            ModeArg::Extended => SolveMode::Extended,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TraceFormat {
    Csv,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Limits, T parameters, branching and movement type
    Analyze,
    /// Transmission function table as CSV
    Sweep {
        #[arg(long, allow_hyphen_values = true)]
        theta_lo: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        theta_hi: Option<f64>,
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Coupler-point trajectory as CSV or SVG
    Trace {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, value_enum, default_value = "csv")]
        format: TraceFormat,
        /// Number of input-angle samples
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Implicit degree-6 coupler curve and its residual on the trace
    Sextic {
        #[command(flatten)]
        point: PointArgs,
        /// Number of input-angle samples for the residual check
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// SVG frames of the moving linkage plus a manifest
    Animate {
        #[arg(long, default_value_t = 24)]
        frames: usize,
        #[arg(long, default_value = "frames")]
        out_dir: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct PointArgs {
    /// Coupler point x in the frame at A along AB
    #[arg(long, allow_hyphen_values = true)]
    pub px: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub py: Option<f64>,
}
