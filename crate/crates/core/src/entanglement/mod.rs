//! Entanglement distance per qubit, `1 - (1/M) sum_i |<sigma^(i)>|^2`.
//!
//! [`ed_numeric`] measures it on a simulated state. The closed forms below
//! need only vertex degrees: every edge touching vertex `i` multiplies the
//! coherence of qubit `i` by a factor of modulus `r`, whatever its direction.

mod topologies;

pub use topologies::{
    ed_binary_tree, ed_binary_tree_limit, ed_bridged_cycles, ed_ffnn, ed_ffnn_displayed,
    ed_young_fibonacci, ed_young_fibonacci_limit, ffnn_degree_distribution,
};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::{DegreeDistribution, DirectedGraph};
use crate::sim::{InitialQubit, InteractionParams, PureState};

/// How an [`EdReport`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdMethod {
    Numeric,
    Closed,
    GeneralClosed,
}

impl EdMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Numeric => "numeric",
            Self::Closed => "closed",
            Self::GeneralClosed => "general-closed",
        }
    }
}

/// Per-vertex contributions `1 - |<sigma^(i)>|^2` and their mean.
#[derive(Debug, Clone, PartialEq)]
pub struct EdReport {
    pub per_vertex: Vec<f64>,
    pub total: f64,
    pub method: EdMethod,
}

impl EdReport {
    fn from_contributions(per_vertex: Vec<f64>, method: EdMethod) -> Self {
        let total = per_vertex.iter().sum::<f64>() / per_vertex.len() as f64;
        Self {
            per_vertex,
            total,
            method,
        }
    }
}

const NORM_TOL: f64 = 1e-8;

pub fn ed_numeric(state: &PureState) -> Result<EdReport> {
    let norm = state.norm_sqr();
    if (norm - 1.0).abs() > NORM_TOL {
        return Err(Error::NotNormalized(norm));
    }
    let per_vertex = (0..state.num_qubits())
        .map(|i| {
            let v = state.pauli_expectations(i)?;
            Ok(1.0 - v.iter().map(|x| x * x).sum::<f64>())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EdReport::from_contributions(per_vertex, EdMethod::Numeric))
}

/// `cos^2 theta` as `(1 + cos 2 theta) / 2`, exact at multiples of `pi/4`.
pub(crate) fn cos_sq(theta: f64) -> f64 {
    0.5 * (1.0 + (2.0 * theta).cos())
}

pub(crate) fn sin_sq(theta: f64) -> f64 {
    0.5 * (1.0 - (2.0 * theta).cos())
}

/// `x^n` by repeated squaring.
pub(crate) fn pow_by_squaring(mut base: f64, mut exp: usize) -> f64 {
    let mut acc = 1.0;
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= base;
        }
        base *= base;
        exp >>= 1;
    }
    acc
}

/// Closed form for the `|+>` input: `1 - (1/M) sum_k n_k cos^{2k} theta`.
pub fn ed_closed_form(dist: &DegreeDistribution, theta: f64) -> Result<f64> {
    let m = dist.num_vertices();
    if m == 0 {
        return Err(Error::InvalidDistribution("no vertices".into()));
    }
    let cos2 = cos_sq(theta);
    let sum: f64 = dist
        .iter()
        .map(|(k, n)| n as f64 * pow_by_squaring(cos2, k))
        .sum();
    Ok((m as f64 - sum) / m as f64)
}

/// Squared modulus of `<phi|Ubar|phi>`: `cos^2 theta + sin^2 theta (1-2p)^2`.
pub fn coherence_decay_sq(p: f64, theta: f64) -> f64 {
    let bias = 1.0 - 2.0 * p;
    cos_sq(theta) + sin_sq(theta) * bias * bias
}

fn check_p(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("p={p} not in [0, 1]")))
    }
}

/// Contribution of a degree-`d` vertex for input population `p`.
pub fn vertex_contribution(degree: usize, p: f64, theta: f64) -> f64 {
    let bias = 1.0 - 2.0 * p;
    1.0 - bias * bias - 4.0 * p * (1.0 - p) * pow_by_squaring(coherence_decay_sq(p, theta), degree)
}

/// Closed form for an arbitrary input population `p`; phases never enter.
pub fn ed_closed_general(dist: &DegreeDistribution, p: f64, theta: f64) -> Result<f64> {
    check_p(p)?;
    let m = dist.num_vertices();
    if m == 0 {
        return Err(Error::InvalidDistribution("no vertices".into()));
    }
    let sum: f64 = dist
        .iter()
        .map(|(k, n)| n as f64 * vertex_contribution(k, p, theta))
        .sum();
    Ok(sum / m as f64)
}

/// Per-vertex closed-form report for the `|+>` input.
pub fn closed_report(graph: &DirectedGraph, theta: f64) -> EdReport {
    let cos2 = cos_sq(theta);
    let powers: Vec<f64> = graph.degrees().into_iter().map(|d| pow_by_squaring(cos2, d)).collect();
    // same rounding as ed_closed_form
    let m = powers.len() as f64;
    let total = (m - powers.iter().sum::<f64>()) / m;
    EdReport {
        per_vertex: powers.iter().map(|c| 1.0 - c).collect(),
        total,
        method: EdMethod::Closed,
    }
}

/// Per-vertex closed-form report for input population `p`.
pub fn closed_general_report(graph: &DirectedGraph, p: f64, theta: f64) -> Result<EdReport> {
    check_p(p)?;
    let per_vertex = graph
        .degrees()
        .into_iter()
        .map(|d| vertex_contribution(d, p, theta))
        .collect();
    Ok(EdReport::from_contributions(per_vertex, EdMethod::GeneralClosed))
}

/// `z = <phi|Ubar|phi>`, including the global `e^{-i psi}` of `Ubar`.
pub fn overlap_z(qubit: &InitialQubit, params: &InteractionParams) -> Complex64 {
    let [u0, u1] = params.ubar();
    u0 * (1.0 - qubit.p) + u1 * qubit.p
}

/// Pauli expectation vector of a vertex with `d_out` outgoing and `d_in`
/// incoming edges, `r^d (2 sqrt(p(1-p)) cos Phi, -2 sqrt(p(1-p)) sin Phi)`
/// plus `1 - 2p`, with
/// `Phi = delta0 - delta1 - d delta + d_out psi + d_in theta`.
///
/// These x/y components agree with simulation when `delta` is the phase of
/// `z` *without* the global factor `e^{-i psi}`, i.e.
/// `arg(overlap_z) + psi`. With `delta = arg(overlap_z)` they are rotated
/// by `d psi`. The norm does not depend on `delta`.
pub fn pauli_vector_closed(
    d_out: usize,
    d_in: usize,
    qubit: &InitialQubit,
    params: &InteractionParams,
    delta: f64,
) -> [f64; 3] {
    let p = qubit.p;
    let d = d_out + d_in;
    let r_d = pow_by_squaring(coherence_decay_sq(p, params.theta), d).sqrt();
    let phi = qubit.delta0 - qubit.delta1 - d as f64 * delta
        + d_out as f64 * params.psi
        + d_in as f64 * params.theta;
    let amp = 2.0 * (p * (1.0 - p)).sqrt() * r_d;
    [amp * phi.cos(), -amp * phi.sin(), 1.0 - 2.0 * p]
}

/// Pair of qubits joined by one edge.
pub fn two_qubit_ed_analytic(p: f64, theta: f64) -> f64 {
    16.0 * p * p * (1.0 - p) * (1.0 - p) * sin_sq(theta)
}
