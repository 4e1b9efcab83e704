use std::path::PathBuf;

use citenet::weights::{Method, NumericMode};
use clap::{Parser, Subcommand, ValueEnum};

use crate::failure::Failure;

/// Path-count weights, repairs and substructures of citation networks.
///
/// Arcs in the input point from the cited work to the citing one. Every run
/// writes its files and a manifest into the output directory.
#[derive(Debug, Parser)]
#[command(name = "citenet", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum Command {
    /// Size, depth, degree and component statistics (cycles allowed).
    Stats(#[command(flatten)] Options),
    /// Make the network acyclic and write it with its strong components.
    Repair(#[command(flatten)] Options),
    /// Arc and vertex weights.
    Weights(#[command(flatten)] Options),
    /// Greedy main path on the arc weights.
    Mainpath(#[command(flatten)] Options),
    /// Heaviest source-to-sink path (critical path method).
    Cpm(#[command(flatten)] Options),
    /// Arcs with weight at least the threshold, and their components.
    Cut(#[command(flatten)] Options),
    /// Maximal (k, K)-islands of the arc weights.
    Islands(#[command(flatten)] Options),
    /// Hubs and authorities.
    Hits(#[command(flatten)] Options),
}

/// The command without its options.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Stats,
    Repair,
    Weights,
    Mainpath,
    Cpm,
    Cut,
    Islands,
    Hits,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Stats => "stats",
            Kind::Repair => "repair",
            Kind::Weights => "weights",
            Kind::Mainpath => "mainpath",
            Kind::Cpm => "cpm",
            Kind::Cut => "cut",
            Kind::Islands => "islands",
            Kind::Hits => "hits",
        }
    }

    /// Commands that compute arc weights first.
    pub fn weighted(self) -> bool {
        matches!(self, Kind::Weights | Kind::Mainpath | Kind::Cpm | Kind::Cut | Kind::Islands)
    }
}

impl Command {
    pub fn split(self) -> (Kind, Options) {
        match self {
            Command::Stats(o) => (Kind::Stats, o),
            Command::Repair(o) => (Kind::Repair, o),
            Command::Weights(o) => (Kind::Weights, o),
            Command::Mainpath(o) => (Kind::Mainpath, o),
            Command::Cpm(o) => (Kind::Cpm, o),
            Command::Cut(o) => (Kind::Cut, o),
            Command::Islands(o) => (Kind::Islands, o),
            Command::Hits(o) => (Kind::Hits, o),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Repair {
    /// Shrink every strong component to one vertex.
    Shrink,
    /// Give every member of a strong component a preprint vertex.
    Preprint,
}

impl Repair {
    pub fn name(self) -> &'static str {
        match self {
            Repair::Shrink => "shrink",
            Repair::Preprint => "preprint",
        }
    }
}

#[derive(Debug, Clone, PartialEq, clap::Args)]
pub struct Options {
    /// Input network in Pajek format.
    pub input: PathBuf,
    /// Weight method: spc, splc, spnp, nppc or sum [default: spc].
    #[arg(long)]
    pub method: Option<Method>,
    /// Numeric mode: float, exact or log [default: log above 10^6 arcs, else float].
    #[arg(long)]
    pub mode: Option<NumericMode>,
    /// Aging factor in (0, 1] for spnp.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Cut threshold, on the linear scale.
    #[arg(long)]
    pub threshold: Option<f64>,
    /// Smallest island size.
    #[arg(long = "k")]
    pub k: Option<usize>,
    /// Largest island size.
    #[arg(long = "K", value_name = "K")]
    pub big_k: Option<usize>,
    /// Repair a cyclic network before computing.
    #[arg(long, value_enum)]
    pub repair: Option<Repair>,
    /// Divide flow weights by the total flow, sum weights by n.
    #[arg(long)]
    pub normalize: bool,
    /// Report natural logarithms of the weights.
    #[arg(long)]
    pub log: bool,
    /// Break main path ties by the smallest head, giving one path.
    #[arg(long)]
    pub single: bool,
    /// Output directory.
    #[arg(long, default_value = "citenet_out")]
    pub out: PathBuf,
    /// Print the run summary as JSON.
    #[arg(long)]
    pub json: bool,
    /// Rows of the hubs and authorities table [default: 15].
    #[arg(long)]
    pub top: Option<usize>,
}

impl Options {
    /// Checks ranges and that every flag given applies to `kind`, before
    /// anything is read or computed.
    pub fn validate(&self, kind: Kind) -> Result<(), Failure> {
        let reject = |flag: &str| Err(Failure::usage(format!("--{flag} does not apply to {}", kind.name())));
        let method = self.method.unwrap_or(Method::Spc);
        if !kind.weighted() {
            for (given, flag) in [
                (self.method.is_some(), "method"),
                (self.mode.is_some(), "mode"),
                (self.alpha.is_some(), "alpha"),
                (self.normalize, "normalize"),
                (self.log, "log"),
            ] {
                if given {
                    return reject(flag);
                }
            }
        }
        if kind == Kind::Stats && self.repair.is_some() {
            return reject("repair");
        }
        if kind != Kind::Cut && self.threshold.is_some() {
            return reject("threshold");
        }
        if kind != Kind::Islands && (self.k.is_some() || self.big_k.is_some()) {
            return reject(if self.k.is_some() { "k" } else { "K" });
        }
        if kind != Kind::Mainpath && self.single {
            return reject("single");
        }
        if kind != Kind::Hits && self.top.is_some() {
            return reject("top");
        }

        if let Some(alpha) = self.alpha {
            if method != Method::Spnp {
                return Err(Failure::usage("--alpha needs --method spnp"));
            }
            if !(alpha > 0.0 && alpha <= 1.0) {
                return Err(Failure::usage(format!("--alpha must lie in (0, 1], got {alpha}")));
            }
            if self.mode.is_some_and(|m| m != NumericMode::Float) {
                return Err(Failure::usage("--alpha computes in float mode only"));
            }
        }
        if self.normalize && method == Method::Nppc {
            return Err(Failure::usage("--normalize does not apply to nppc"));
        }
        if !method.is_flow() {
            if self.mode.is_some_and(|m| m != NumericMode::Exact) {
                return Err(Failure::usage(format!("{method} weights are exact integers")));
            }
            if matches!(kind, Kind::Mainpath | Kind::Cpm) {
                return Err(Failure::usage(format!(
                    "{} needs a flow method (spc, splc, spnp), got {method}",
                    kind.name()
                )));
            }
        }
        match kind {
            Kind::Cut => match self.threshold {
                None => return Err(Failure::usage("cut needs --threshold")),
                Some(t) if !t.is_finite() => {
                    return Err(Failure::usage(format!("--threshold must be finite, got {t}")))
                }
                _ => {}
            },
            Kind::Islands => match (self.k, self.big_k) {
                (Some(k), Some(big_k)) if k >= 1 && big_k >= k => {}
                (Some(k), Some(big_k)) => {
                    return Err(Failure::usage(format!("need 1 <= k <= K, got k = {k}, K = {big_k}")))
                }
                _ => return Err(Failure::usage("islands needs --k and --K")),
            },
            Kind::Hits if self.top == Some(0) => return Err(Failure::usage("--top must be positive")),
            _ => {}
        }
        Ok(())
    }
}
