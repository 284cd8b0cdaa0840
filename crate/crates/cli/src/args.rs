use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use sawlab_core::EnumConfig;

#[derive(Parser, Debug)]
#[command(
    name = "sawlab",
    version,
    about = "Self-avoiding walk counts, bounds and samples"
)]
pub struct Cli {
    #[command(flatten)]
    pub opts: CommonOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CommonOpts {
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,
    /// Node-visit budget for enumeration.
    #[arg(long, global = true, default_value_t = EnumConfig::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Depth at which the walk tree is split into parallel tasks.
    #[arg(long, global = true, default_value_t = EnumConfig::DEFAULT_PREFIX_DEPTH)]
    pub prefix_depth: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Directory holding the series ledger. Overrides SAWLAB_CACHE_DIR.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn as_str(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

/// Graph selection: either family flags or a JSON spec.
#[derive(Args, Debug, Clone, Default)]
pub struct GraphOpts {
    #[arg(long, conflicts_with = "graph")]
    pub family: Option<String>,
    #[arg(long)]
    pub dim: Option<u32>,
    #[arg(long)]
    pub degree: Option<u32>,
    #[arg(long)]
    pub girth: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub coloring: Option<String>,
    /// Graph spec as JSON, e.g. '{"family":"fisher","base":{"family":"hexagonal"}}'.
    #[arg(long)]
    pub graph: Option<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Auto,
    Exact,
    Mc,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the built-in graph families.
    Families,
    /// Walk counts σ_0..σ_n.
    Count {
        #[command(flatten)]
        graph: GraphOpts,
        #[arg(long)]
        n: usize,
    },
    /// Bridge counts b_0..b_n.
    Bridges {
        #[command(flatten)]
        graph: GraphOpts,
        #[arg(long)]
        n: usize,
    },
    /// Lower and upper bounds on the connective constant at length n.
    Interval {
        #[command(flatten)]
        graph: GraphOpts,
        #[arg(long)]
        n: usize,
    },
    /// Ratio estimate (σ_{n+step}/σ_n)^{1/step}.
    Ratio {
        #[command(flatten)]
        graph: GraphOpts,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        step: usize,
    },
    /// Fisher transform relations between connective constants.
    #[command(group(ArgGroup::new("op").required(true).args(["pull", "push", "iterate", "semicubic"])))]
    Fisher {
        #[arg(long)]
        pull: Option<f64>,
        #[arg(long)]
        push: Option<f64>,
        #[arg(long, requires = "k")]
        iterate: Option<f64>,
        #[arg(long, requires = "iterate")]
        k: Option<usize>,
        #[arg(long)]
        semicubic: Option<f64>,
    },
    /// Upper bound for Δ-regular graphs of girth g.
    Girthbound {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        girth: u32,
    },
    /// Lower bound for cubic graphs of girth 3 or 4.
    Cubiclower {
        #[arg(long)]
        girth: u32,
    },
    /// Spectral lower bound, from a given or estimated spectral bottom.
    #[command(group(ArgGroup::new("source").required(true).args(["lambda", "estimate"])))]
    Spectral {
        #[command(flatten)]
        graph: GraphOpts,
        #[arg(long)]
        lambda: Option<f64>,
        #[arg(long)]
        estimate: bool,
        /// Return-probability depth for --estimate.
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
    /// Ratio estimates on cylinder quotients of Z² against Z² itself.
    Locality {
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<u32>,
        #[arg(long)]
        n: usize,
    },
    /// Exactly uniform n-step walks.
    Sample {
        #[command(flatten)]
        graph: GraphOpts,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Mean squared displacement table and exponent fit.
    Nu {
        #[command(flatten)]
        graph: GraphOpts,
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
    },
    /// Empirical P(‖π_n‖ ≤ c·n).
    Speed {
        #[command(flatten)]
        graph: GraphOpts,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.1)]
        c: f64,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a named experiment end to end and print its table.
    Report { name: String },
}
