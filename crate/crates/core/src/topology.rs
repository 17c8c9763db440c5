//! Deterministic generators for the layered topology families.
//!
//! Vertices are numbered layer by layer from the top (or input, or left),
//! left to right within a layer. Every edge points downstream.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::DirectedGraph;

/// A topology family together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologySpec {
    /// Triangular lattice with `layers` rows; row `i` holds `i` vertices.
    YoungFibonacci { layers: usize },
    /// Complete bipartite links between consecutive layers.
    Ffnn { layer_sizes: Vec<usize> },
    /// Full binary tree with `depth` levels.
    BinaryTree { depth: usize },
    /// Directed cycles joined in a chain by single bridge edges.
    BridgedCycles { cycle_sizes: Vec<usize> },
}

impl TopologySpec {
    pub fn generate(&self) -> Result<DirectedGraph> {
        match self {
            Self::YoungFibonacci { layers } => gen_young_fibonacci(*layers),
            Self::Ffnn { layer_sizes } => gen_ffnn(layer_sizes),
            Self::BinaryTree { depth } => gen_full_binary_tree(*depth),
            Self::BridgedCycles { cycle_sizes } => gen_bridged_cycles(cycle_sizes),
        }
    }

    /// Short tag used on the command line.
    pub fn tag(&self) -> &'static str {
        match self {
            Self::YoungFibonacci { .. } => "yf",
            Self::Ffnn { .. } => "ffnn",
            Self::BinaryTree { .. } => "btree",
            Self::BridgedCycles { .. } => "bridged",
        }
    }
}

impl fmt::Display for TopologySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Self::YoungFibonacci { layers } => write!(f, "yf(layers={layers})"),
            Self::Ffnn { layer_sizes } => write!(f, "ffnn({})", join(layer_sizes)),
            Self::BinaryTree { depth } => write!(f, "btree(depth={depth})"),
            Self::BridgedCycles { cycle_sizes } => write!(f, "bridged({})", join(cycle_sizes)),
        }
    }
}

pub fn gen_young_fibonacci(layers: usize) -> Result<DirectedGraph> {
    if layers < 2 {
        return Err(Error::InvalidTopology(format!(
            "young-fibonacci needs at least 2 layers, got {layers}"
        )));
    }
    // layer i (1-based) starts at i(i-1)/2
    let offset = |i: usize| i * (i - 1) / 2;
    let num_vertices = layers * (layers + 1) / 2;
    let mut edges = Vec::with_capacity(layers * (layers - 1));
    for i in 1..layers {
        for j in 0..i {
            let v = offset(i) + j;
            edges.push((v, offset(i + 1) + j));
            edges.push((v, offset(i + 1) + j + 1));
        }
    }
    DirectedGraph::from_edge_list(num_vertices, &edges)
}

pub fn gen_ffnn(layer_sizes: &[usize]) -> Result<DirectedGraph> {
    check_ffnn_sizes(layer_sizes)?;
    let mut edges = Vec::new();
    let mut start = 0;
    for pair in layer_sizes.windows(2) {
        let next = start + pair[0];
        for a in start..next {
            for b in next..next + pair[1] {
                edges.push((a, b));
            }
        }
        start = next;
    }
    DirectedGraph::from_edge_list(layer_sizes.iter().sum(), &edges)
}

pub(crate) fn check_ffnn_sizes(layer_sizes: &[usize]) -> Result<()> {
    if layer_sizes.len() < 2 {
        return Err(Error::InvalidTopology(format!(
            "feed-forward network needs at least 2 layers, got {}",
            layer_sizes.len()
        )));
    }
    if layer_sizes.contains(&0) {
        return Err(Error::InvalidTopology(
            "feed-forward layer sizes must be positive".into(),
        ));
    }
    Ok(())
}

pub fn gen_full_binary_tree(depth: usize) -> Result<DirectedGraph> {
    if depth < 1 {
        return Err(Error::InvalidTopology("binary tree depth must be >= 1".into()));
    }
    if depth >= usize::BITS as usize {
        return Err(Error::InvalidTopology(format!("binary tree depth {depth} too large")));
    }
    let num_vertices = (1usize << depth) - 1;
    // heap order is already layer-by-layer, left to right
    let edges: Vec<_> = (1..num_vertices).map(|v| ((v - 1) / 2, v)).collect();
    DirectedGraph::from_edge_list(num_vertices, &edges)
}

/// Where the bridge into cycle `i + 1` lands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BridgePlacement {
    /// Vertex `floor(M_{i+1} / 2)`, roughly opposite the outgoing bridge.
    #[default]
    Opposite,
    /// Vertex 1, next to the outgoing bridge at vertex 0.
    Adjacent,
}

pub fn gen_bridged_cycles(cycle_sizes: &[usize]) -> Result<DirectedGraph> {
    gen_bridged_cycles_with(cycle_sizes, BridgePlacement::default())
}

/// Bridged cycles with an explicit bridge placement. Each bridge leaves
/// vertex 0 of cycle `i`.
pub fn gen_bridged_cycles_with(
    cycle_sizes: &[usize],
    placement: BridgePlacement,
) -> Result<DirectedGraph> {
    if cycle_sizes.len() < 2 {
        return Err(Error::InvalidTopology(format!(
            "bridged cycles need at least 2 cycles, got {}",
            cycle_sizes.len()
        )));
    }
    if let Some(&bad) = cycle_sizes.iter().find(|&&m| m < 3) {
        return Err(Error::InvalidTopology(format!(
            "every cycle needs at least 3 vertices, got {bad}"
        )));
    }
    let mut offsets = Vec::with_capacity(cycle_sizes.len());
    let mut total = 0;
    for &m in cycle_sizes {
        offsets.push(total);
        total += m;
    }
    let mut edges = Vec::with_capacity(total + cycle_sizes.len() - 1);
    for (&start, &m) in offsets.iter().zip(cycle_sizes) {
        edges.extend((0..m).map(|j| (start + j, start + (j + 1) % m)));
    }
    for i in 0..cycle_sizes.len() - 1 {
        let landing = match placement {
            BridgePlacement::Opposite => cycle_sizes[i + 1] / 2,
            BridgePlacement::Adjacent => 1,
        };
        edges.push((offsets[i], offsets[i + 1] + landing));
    }
    DirectedGraph::from_edge_list(total, &edges)
}
