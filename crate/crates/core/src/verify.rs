//! Cross-checks between the simulated and the closed-form entanglement
//! distance, plus the invariances the closed form implies.

use std::f64::consts::{PI, TAU};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::entanglement::{ed_closed_form, ed_closed_general, ed_numeric, pauli_vector_closed, overlap_z};
use crate::error::Result;
use crate::graph::{DegreeDistribution, DirectedGraph};
use crate::sim::{build_graph_state, InitialQubit, InteractionParams, SimConfig};

/// Closed form under test, `(distribution, theta) -> ED` at the `|+>` input.
pub type ClosedForm<'a> = &'a dyn Fn(&DegreeDistribution, f64) -> Result<f64>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub config: SimConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            samples: 25,
            seed: 42,
            tol: 1e-10,
            config: SimConfig::default(),
        }
    }
}

/// The checks run on every graph, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// Simulated ED at `|+>` against the closed form.
    Oracle,
    /// Simulated ED at a random input against the general closed form.
    GeneralOracle,
    /// Change of the simulated ED when only `psi` changes.
    PsiIndependence,
    /// Change of the simulated ED when one edge is reversed.
    OrientationFlip,
    /// Change of the simulated ED under a random relabeling.
    Relabeling,
    /// Simulated Pauli-vector norms against the closed-form vector.
    PauliNorm,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Oracle,
        Check::GeneralOracle,
        Check::PsiIndependence,
        Check::OrientationFlip,
        Check::Relabeling,
        Check::PauliNorm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Oracle => "oracle",
            Check::GeneralOracle => "general-oracle",
            Check::PsiIndependence => "psi-independence",
            Check::OrientationFlip => "orientation-flip",
            Check::Relabeling => "relabeling",
            Check::PauliNorm => "pauli-norm",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckResult {
    pub check: Check,
    pub max_deviation: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub graphs: usize,
    pub samples: usize,
    pub tol: f64,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    fn empty(tol: f64) -> Self {
        Self {
            graphs: 0,
            samples: 0,
            tol,
            checks: Check::ALL
                .iter()
                .map(|&check| CheckResult {
                    check,
                    max_deviation: 0.0,
                    evaluations: 0,
                })
                .collect(),
        }
    }

    fn record(&mut self, check: Check, deviation: f64) {
        let slot = self
            .checks
            .iter_mut()
            .find(|c| c.check == check)
            .expect("every check has a slot");
        // NaN must fail the comparison below, so keep it
        if deviation.is_nan() || deviation > slot.max_deviation {
            slot.max_deviation = deviation;
        }
        slot.evaluations += 1;
    }

    pub fn max_deviation(&self, check: Check) -> f64 {
        self.checks
            .iter()
            .find(|c| c.check == check)
            .map_or(0.0, |c| c.max_deviation)
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.max_deviation <= self.tol)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "graphs: {}  samples: {}  tol: {:e}",
            self.graphs, self.samples, self.tol
        )?;
        writeln!(f, "{:<18} {:>14} {:>6}  status", "check", "max deviation", "evals")?;
        for c in &self.checks {
            let status = if c.max_deviation <= self.tol { "ok" } else { "FAIL" };
            writeln!(
                f,
                "{:<18} {:>14.3e} {:>6}  {}",
                c.check.name(),
                c.max_deviation,
                c.evaluations,
                status
            )?;
        }
        write!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

struct Draw {
    theta: f64,
    psi: f64,
    psi_alt: f64,
    qubit: InitialQubit,
}

fn draw(rng: &mut ChaCha8Rng) -> Result<Draw> {
    Ok(Draw {
        theta: rng.random_range(0.0..=PI),
        psi: rng.random_range(-PI..PI),
        psi_alt: rng.random_range(-PI..PI),
        qubit: InitialQubit::new(
            rng.random_range(0.0..=1.0),
            rng.random_range(0.0..TAU),
            rng.random_range(0.0..TAU),
        )?,
    })
}

fn simulated_ed(g: &DirectedGraph, q: &InitialQubit, theta: f64, psi: f64, cfg: &SimConfig) -> Result<f64> {
    let state = build_graph_state(g, q, &InteractionParams::new(theta, psi)?, cfg)?;
    Ok(ed_numeric(&state)?.total)
}

fn verify_into(
    report: &mut VerifyReport,
    g: &DirectedGraph,
    rng: &mut ChaCha8Rng,
    opts: &VerifyOptions,
    closed: ClosedForm<'_>,
) -> Result<()> {
    let dist = g.degree_distribution();
    let cfg = &opts.config;
    let plus = InitialQubit::default();
    for _ in 0..opts.samples {
        let d = draw(rng)?;

        let numeric = simulated_ed(g, &plus, d.theta, d.psi, cfg)?;
        report.record(Check::Oracle, (numeric - closed(&dist, d.theta)?).abs());

        let params = InteractionParams::new(d.theta, d.psi)?;
        let state = build_graph_state(g, &d.qubit, &params, cfg)?;
        let general = ed_numeric(&state)?.total;
        report.record(
            Check::GeneralOracle,
            (general - ed_closed_general(&dist, d.qubit.p, d.theta)?).abs(),
        );

        let alt = simulated_ed(g, &d.qubit, d.theta, d.psi_alt, cfg)?;
        report.record(Check::PsiIndependence, (general - alt).abs());

        if g.num_edges() > 0 {
            let flipped = g.flip_edge(rng.random_range(0..g.num_edges()))?;
            let e = simulated_ed(&flipped, &d.qubit, d.theta, d.psi, cfg)?;
            report.record(Check::OrientationFlip, (general - e).abs());
        }

        let mut perm: Vec<usize> = (0..g.num_vertices()).collect();
        perm.shuffle(rng);
        let e = simulated_ed(&g.permute_vertices(&perm)?, &d.qubit, d.theta, d.psi, cfg)?;
        report.record(Check::Relabeling, (general - e).abs());

        let delta = overlap_z(&d.qubit, &params).arg();
        for i in 0..g.num_vertices() {
            let numeric = state.pauli_expectations(i)?;
            let closed_vec = pauli_vector_closed(g.out_degree(i)?, g.in_degree(i)?, &d.qubit, &params, delta);
            let n2 = |v: [f64; 3]| v.iter().map(|x| x * x).sum::<f64>();
            report.record(Check::PauliNorm, (n2(numeric) - n2(closed_vec)).abs());
        }
    }
    report.graphs += 1;
    report.samples += opts.samples;
    Ok(())
}

/// Runs every check on one graph with `samples` seeded parameter draws.
pub fn verify_graph(g: &DirectedGraph, opts: &VerifyOptions) -> Result<VerifyReport> {
    verify_graph_with(g, opts, &ed_closed_form)
}

/// [`verify_graph`] against a caller-supplied closed form.
pub fn verify_graph_with(
    g: &DirectedGraph,
    opts: &VerifyOptions,
    closed: ClosedForm<'_>,
) -> Result<VerifyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut report = VerifyReport::empty(opts.tol);
    verify_into(&mut report, g, &mut rng, opts, closed)?;
    Ok(report)
}

/// Erdős–Rényi-style graph: each unordered pair joined with probability
/// `edge_prob`, in a random direction.
pub fn random_graph<R: Rng>(rng: &mut R, num_vertices: usize, edge_prob: f64) -> Result<DirectedGraph> {
    let mut edges = Vec::new();
    for a in 0..num_vertices {
        for b in (a + 1)..num_vertices {
            if rng.random_bool(edge_prob) {
                edges.push(if rng.random_bool(0.5) { (a, b) } else { (b, a) });
            }
        }
    }
    DirectedGraph::from_edge_list(num_vertices, &edges)
}

/// Edge probability used for random test graphs.
pub const RANDOM_EDGE_PROB: f64 = 0.4;

/// `count` seeded random graphs with between 1 and `max_vertices` vertices.
pub fn random_graphs(count: usize, max_vertices: usize, seed: u64) -> Result<Vec<DirectedGraph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let m = rng.random_range(1..=max_vertices.max(1));
            random_graph(&mut rng, m, RANDOM_EDGE_PROB)
        })
        .collect()
}

/// Runs every check across a set of graphs, sharing one random stream.
pub fn verify_graphs(graphs: &[DirectedGraph], opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut report = VerifyReport::empty(opts.tol);
    for g in graphs {
        verify_into(&mut report, g, &mut rng, opts, &ed_closed_form)?;
    }
    Ok(report)
}
