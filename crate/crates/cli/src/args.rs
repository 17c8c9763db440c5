use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "graphent", version, about = "Entanglement distance of directed graph states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a topology and write it as a graph file.
    Gen(GenArgs),
    /// Evaluate the entanglement distance of one graph.
    Ed(EdArgs),
    /// Sweep a quantity over theta (and optionally p) into CSV.
    Sweep(SweepArgs),
    /// Compare the closed forms against state-vector simulation.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Topology {
    Yf,
    Ffnn,
    Btree,
    Bridged,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Simulate,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QuantityArg {
    Ed,
    EdGeneral,
    Entropy,
    Hs2,
}

/// Where a graph comes from: a file or a generated topology.
#[derive(Debug, Clone, Args)]
pub struct GraphSource {
    /// Graph file (`{"num_vertices": M, "edges": [[a, b], ...]}`).
    #[arg(long, conflicts_with = "topology")]
    pub graph: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub topology: Option<Topology>,
    /// Number of layers (yf).
    #[arg(long)]
    pub layers: Option<usize>,
    /// Layer sizes (ffnn), comma separated.
    #[arg(long, value_delimiter = ',')]
    pub layer_sizes: Option<Vec<usize>>,
    /// Cycle sizes (bridged), comma separated.
    #[arg(long, value_delimiter = ',')]
    pub cycles: Option<Vec<usize>>,
    /// Tree depth (btree).
    #[arg(long)]
    pub depth: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct ThetaArg {
    /// Interaction angle in radians.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "theta_pi_frac")]
    pub theta: Option<f64>,
    /// Interaction angle as a rational multiple of pi, e.g. `1/4`.
    #[arg(long)]
    pub theta_pi_frac: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct QubitCapArg {
    /// Largest graph the simulator accepts.
    #[arg(long, env = "GRAPHENT_MAX_QUBITS")]
    pub max_qubits: Option<usize>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Output file; the graph goes to standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EdArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[command(flatten)]
    pub theta: ThetaArg,
    /// Input population |alpha_1|^2.
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub psi: f64,
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    pub method: Method,
    #[command(flatten)]
    pub cap: QubitCapArg,
    /// Print per-vertex contributions.
    #[arg(long)]
    pub verbose: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub quantity: QuantityArg,
    #[command(flatten)]
    pub source: GraphSource,
    /// Sweep the large-N limit of the yf or btree family instead of a graph.
    #[arg(long)]
    pub limit: bool,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub theta_min: f64,
    #[arg(long, default_value_t = std::f64::consts::PI, allow_hyphen_values = true)]
    pub theta_max: f64,
    #[arg(long, default_value_t = 33)]
    pub theta_steps: usize,
    /// Adds a p axis; without it p is fixed at `--p`.
    #[arg(long)]
    pub p_steps: Option<usize>,
    #[arg(long, default_value_t = 0.0)]
    pub p_min: f64,
    #[arg(long, default_value_t = 1.0)]
    pub p_max: f64,
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub psi: f64,
    /// Evaluation route for graph quantities (`both` is not meaningful here).
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    pub method: Method,
    #[command(flatten)]
    pub cap: QubitCapArg,
    /// CSV destination; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Random graphs to check when no graph or topology is given.
    #[arg(long, default_value_t = 200)]
    pub random_graphs: usize,
    #[arg(long, default_value_t = 10)]
    pub max_vertices: usize,
    /// Parameter draws per graph.
    #[arg(long, default_value_t = 25)]
    pub samples: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[command(flatten)]
    pub cap: QubitCapArg,
}
