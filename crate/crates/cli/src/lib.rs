//! Command-line front end for `graphent`.
//!
//! Exit codes: 0 on success, 1 when verification finds a deviation above
//! tolerance, 2 for usage, parse, input and I/O errors.

pub mod args;

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use clap::Parser;

use graphent_core::entanglement::{closed_general_report, closed_report, ed_numeric, EdReport};
use graphent_core::sim::{build_graph_state, InitialQubit, InteractionParams, SimConfig};
use graphent_core::sweep::{Grid, Quantity, SweepMethod, SweepSpec};
use graphent_core::verify::{random_graphs, verify_graph, verify_graphs, VerifyOptions};
use graphent_core::{DirectedGraph, TopologySpec};

use args::{Cli, Command, EdArgs, GenArgs, GraphSource, Method, QuantityArg, QubitCapArg, SweepArgs, ThetaArg, Topology, VerifyArgs};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(graphent_core::Error),
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

impl From<graphent_core::Error> for CliError {
    fn from(e: graphent_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses `argv` and runs the command, writing to the given streams.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(&a, out, err),
        Command::Ed(a) => cmd_ed(&a, out),
        Command::Sweep(a) => cmd_sweep(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

fn topology_spec(source: &GraphSource) -> CliResult<Option<TopologySpec>> {
    let Some(topology) = source.topology else {
        return Ok(None);
    };
    let spec = match topology {
        Topology::Yf => TopologySpec::YoungFibonacci {
            layers: source.layers.ok_or_else(|| CliError::Usage("--topology yf needs --layers".into()))?,
        },
        Topology::Ffnn => TopologySpec::Ffnn {
            layer_sizes: source
                .layer_sizes
                .clone()
                .ok_or_else(|| CliError::Usage("--topology ffnn needs --layer-sizes".into()))?,
        },
        Topology::Btree => TopologySpec::BinaryTree {
            depth: source.depth.ok_or_else(|| CliError::Usage("--topology btree needs --depth".into()))?,
        },
        Topology::Bridged => TopologySpec::BridgedCycles {
            cycle_sizes: source
                .cycles
                .clone()
                .ok_or_else(|| CliError::Usage("--topology bridged needs --cycles".into()))?,
        },
    };
    Ok(Some(spec))
}

fn load_graph(source: &GraphSource) -> CliResult<Option<DirectedGraph>> {
    if let Some(path) = &source.graph {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        return Ok(Some(DirectedGraph::from_json(&text)?));
    }
    match topology_spec(source)? {
        Some(spec) => Ok(Some(spec.generate()?)),
        None => Ok(None),
    }
}

fn require_graph(source: &GraphSource) -> CliResult<DirectedGraph> {
    load_graph(source)?.map_or_else(|| usage("a graph is required: pass --graph or --topology"), Ok)
}

/// Parses `a/b`, `a` or a decimal as a multiple of pi.
pub fn parse_pi_fraction(text: &str) -> CliResult<f64> {
    let bad = || CliError::Usage(format!("cannot parse pi fraction {text:?}"));
    let value = match text.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|_| bad())?;
            let den: f64 = den.trim().parse().map_err(|_| bad())?;
            if den == 0.0 {
                return Err(bad());
            }
            num / den
        }
        None => text.trim().parse().map_err(|_| bad())?,
    };
    if !value.is_finite() {
        return Err(bad());
    }
    Ok(value * std::f64::consts::PI)
}

fn resolve_theta(arg: &ThetaArg) -> CliResult<f64> {
    match (&arg.theta, &arg.theta_pi_frac) {
        (Some(t), _) => Ok(*t),
        (None, Some(frac)) => parse_pi_fraction(frac),
        (None, None) => usage("--theta or --theta-pi-frac is required"),
    }
}

fn sim_config(cap: &QubitCapArg) -> SimConfig {
    cap.max_qubits.map_or_else(SimConfig::default, SimConfig::with_max_qubits)
}

fn cmd_gen(args: &GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    let Some(spec) = topology_spec(&args.source)? else {
        return usage("gen needs --topology");
    };
    let g = spec.generate()?;
    let summary = format!(
        "topology: {spec}\nvertices: {}\nedges: {}\ndegree distribution: {}\n",
        g.num_vertices(),
        g.num_edges(),
        g.degree_distribution()
    );
    let json = g.to_json();
    match &args.out {
        Some(path) => {
            write_file(path, format!("{json}\n").as_bytes())?;
            out.write_all(summary.as_bytes())?;
        }
        None => {
            writeln!(out, "{json}")?;
            err.write_all(summary.as_bytes())?;
        }
    }
    Ok(EXIT_OK)
}

fn write_file(path: &Path, bytes: &[u8]) -> CliResult<()> {
    fs::write(path, bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn closed_for(g: &DirectedGraph, p: f64, theta: f64) -> CliResult<EdReport> {
    if p == 0.5 {
        Ok(closed_report(g, theta))
    } else {
        Ok(closed_general_report(g, p, theta)?)
    }
}

fn cmd_ed(args: &EdArgs, out: &mut dyn Write) -> CliResult<i32> {
    let g = require_graph(&args.source)?;
    let theta = resolve_theta(&args.theta)?;
    let qubit = InitialQubit::with_p(args.p)?;
    let params = InteractionParams::new(theta, args.psi)?;
    let config = sim_config(&args.cap);

    let closed = match args.method {
        Method::Closed | Method::Both => Some(closed_for(&g, args.p, theta)?),
        Method::Simulate => None,
    };
    let simulated = match args.method {
        Method::Simulate | Method::Both => {
            let state = build_graph_state(&g, &qubit, &params, &config)?;
            Some(ed_numeric(&state)?)
        }
        Method::Closed => None,
    };

    writeln!(out, "vertices: {}", g.num_vertices())?;
    writeln!(out, "edges: {}", g.num_edges())?;
    writeln!(out, "theta: {theta}")?;
    writeln!(out, "p: {}", args.p)?;
    writeln!(out, "psi: {}", args.psi)?;
    if let Some(r) = &closed {
        writeln!(out, "closed: {}", r.total)?;
    }
    if let Some(r) = &simulated {
        writeln!(out, "simulate: {}", r.total)?;
    }
    if let (Some(c), Some(s)) = (&closed, &simulated) {
        writeln!(out, "diff: {:e}", (c.total - s.total).abs())?;
    }
    if args.verbose {
        let degrees = g.degrees();
        writeln!(out, "vertex,degree,closed,simulate")?;
        for (i, d) in degrees.iter().enumerate() {
            let cell = |r: &Option<EdReport>| r.as_ref().map_or(String::new(), |r| r.per_vertex[i].to_string());
            writeln!(out, "{i},{d},{},{}", cell(&closed), cell(&simulated))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> CliResult<i32> {
    let quantity = if args.limit {
        if args.quantity != QuantityArg::Ed {
            return usage("--limit only applies to --quantity ed");
        }
        match args.source.topology {
            Some(Topology::Yf) => Quantity::YoungFibonacciLimit,
            Some(Topology::Btree) => Quantity::BinaryTreeLimit,
            _ => return usage("--limit needs --topology yf or btree"),
        }
    } else {
        match args.quantity {
            QuantityArg::Ed => Quantity::Ed(require_graph(&args.source)?),
            QuantityArg::EdGeneral => Quantity::EdGeneral(require_graph(&args.source)?),
            QuantityArg::Entropy => Quantity::Entropy,
            QuantityArg::Hs2 => Quantity::Hs2,
        }
    };
    let mut spec = SweepSpec::new(quantity, Grid::new(args.theta_min, args.theta_max, args.theta_steps)?);
    if let Some(steps) = args.p_steps {
        spec.p = Some(Grid::new(args.p_min, args.p_max, steps)?);
    }
    spec.fixed_p = args.p;
    spec.psi = args.psi;
    spec.method = match args.method {
        Method::Closed => SweepMethod::Closed,
        Method::Simulate => SweepMethod::Simulate,
        Method::Both => return usage("sweep takes --method closed or simulate"),
    };
    spec.config = sim_config(&args.cap);
    let table = spec.run()?;
    let csv = table.to_csv_string();
    match &args.out {
        Some(path) => write_file(path, csv.as_bytes())?,
        None => out.write_all(csv.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CliResult<i32> {
    if args.tol.is_nan() || args.tol < 0.0 {
        return usage("--tol must be non-negative");
    }
    let opts = VerifyOptions {
        samples: args.samples,
        seed: args.seed,
        tol: args.tol,
        config: sim_config(&args.cap),
    };
    let report = match load_graph(&args.source)? {
        Some(g) => {
            writeln!(out, "graph: {} vertices, {} edges", g.num_vertices(), g.num_edges())?;
            verify_graph(&g, &opts)?
        }
        None => {
            if args.max_vertices > opts.config.max_qubits {
                return usage(format!(
                    "--max-vertices {} exceeds the qubit cap {}",
                    args.max_vertices, opts.config.max_qubits
                ));
            }
            writeln!(
                out,
                "graph: {} random graphs, up to {} vertices, seed {}",
                args.random_graphs, args.max_vertices, args.seed
            )?;
            let graphs = random_graphs(args.random_graphs, args.max_vertices, args.seed)?;
            verify_graphs(&graphs, &opts)?
        }
    };
    writeln!(out, "{report}")?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(argv: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("graphent").chain(argv.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn pi_fractions() {
        use std::f64::consts::PI;
        assert_eq!(parse_pi_fraction("1/4").unwrap(), PI / 4.0);
        assert_eq!(parse_pi_fraction("0.5").unwrap(), PI / 2.0);
        assert_eq!(parse_pi_fraction("3 / 2").unwrap(), 1.5 * PI);
        assert!(parse_pi_fraction("1/0").is_err());
        assert!(parse_pi_fraction("pi").is_err());
    }

    #[test]
    fn gen_to_stdout() {
        let (code, out, err) = run_capture(&["gen", "--topology", "btree", "--depth", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"num_vertices\":3,\"edges\":[[0,1],[0,2]]}\n");
        assert!(err.contains("vertices: 3"));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_capture(&["gen", "--topology", "yf"]).0, 2);
        assert_eq!(run_capture(&["gen", "--topology", "yf", "--layers", "1"]).0, 2);
        assert_eq!(run_capture(&["ed", "--topology", "yf", "--layers", "3"]).0, 2);
        assert_eq!(run_capture(&["nonsense"]).0, 2);
        assert_eq!(run_capture(&["sweep", "--quantity", "ed", "--limit", "--topology", "ffnn"]).0, 2);
        assert_eq!(run_capture(&["ed", "--graph", "/nonexistent/g.json", "--theta", "1"]).0, 2);
    }

    #[test]
    fn ed_closed_and_simulated_agree() {
        let (code, out, _) = run_capture(&[
            "ed", "--topology", "yf", "--layers", "3", "--theta-pi-frac", "1/4", "--method", "both", "--verbose",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("closed: 0.7083333333333334\n"), "{out}");
        assert!(out.contains("simulate: 0.70833333333333"), "{out}");
        assert!(out.contains("vertex,degree,closed,simulate\n0,2,0.75,"), "{out}");
    }

    #[test]
    fn ed_respects_qubit_cap() {
        let (code, _, err) = run_capture(&[
            "ed", "--topology", "btree", "--depth", "3", "--theta", "1", "--method", "simulate", "--max-qubits", "5",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("cap"));
    }

    #[test]
    fn sweep_to_stdout() {
        let (code, out, _) = run_capture(&["sweep", "--quantity", "entropy", "--theta-min", "0", "--theta-max", "1.5707963267948966", "--theta-steps", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "theta,value\n0,0\n1.5707963267948966,0.69314718055994529\n");
    }
}
