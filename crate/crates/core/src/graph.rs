//! Directed simple graphs and their degree bookkeeping.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A directed simple graph on vertices `0..num_vertices`.
///
/// At most one edge joins any unordered pair of vertices, so the in- and
/// out-neighbourhoods of a vertex are always disjoint. Instances are
/// immutable; the transformations below return new graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl DirectedGraph {
    /// Validates and builds a graph from an ordered edge list.
    pub fn from_edge_list(num_vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if num_vertices == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut out_adj = vec![Vec::new(); num_vertices];
        let mut in_adj = vec![Vec::new(); num_vertices];
        for &(a, b) in edges {
            for index in [a, b] {
                if index >= num_vertices {
                    return Err(Error::VertexOutOfRange { index, num_vertices });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::DuplicateEdge(a, b));
            }
            out_adj[a].push(b);
            in_adj[b].push(a);
        }
        for list in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            list.sort_unstable();
        }
        Ok(Self {
            num_vertices,
            edges: edges.to_vec(),
            out_adj,
            in_adj,
        })
    }

    /// The graph on `num_vertices` vertices with no edges.
    pub fn empty(num_vertices: usize) -> Result<Self> {
        Self::from_edge_list(num_vertices, &[])
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn check_vertex(&self, index: usize) -> Result<()> {
        if index < self.num_vertices {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index,
                num_vertices: self.num_vertices,
            })
        }
    }

    /// Targets of edges leaving `i`, sorted.
    pub fn out_neighbors(&self, i: usize) -> Result<&[usize]> {
        self.check_vertex(i)?;
        Ok(&self.out_adj[i])
    }

    /// Sources of edges entering `i`, sorted.
    pub fn in_neighbors(&self, i: usize) -> Result<&[usize]> {
        self.check_vertex(i)?;
        Ok(&self.in_adj[i])
    }

    pub fn out_degree(&self, i: usize) -> Result<usize> {
        self.out_neighbors(i).map(<[usize]>::len)
    }

    pub fn in_degree(&self, i: usize) -> Result<usize> {
        self.in_neighbors(i).map(<[usize]>::len)
    }

    /// Total degree, ignoring orientation.
    pub fn degree(&self, i: usize) -> Result<usize> {
        self.check_vertex(i)?;
        Ok(self.out_adj[i].len() + self.in_adj[i].len())
    }

    /// Total degree of every vertex, in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.num_vertices)
            .map(|i| self.out_adj[i].len() + self.in_adj[i].len())
            .collect()
    }

    /// Oriented adjacency matrix, row `a` column `b` set when `(a, b)` is an edge.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let mut gamma = vec![vec![0u8; self.num_vertices]; self.num_vertices];
        for &(a, b) in &self.edges {
            gamma[a][b] = 1;
        }
        gamma
    }

    pub fn degree_distribution(&self) -> DegreeDistribution {
        let mut counts = BTreeMap::new();
        for d in self.degrees() {
            *counts.entry(d).or_insert(0) += 1;
        }
        DegreeDistribution {
            counts,
            num_vertices: self.num_vertices,
        }
    }

    /// Relabels vertex `i` as `permutation[i]`. Edge order is kept.
    pub fn permute_vertices(&self, permutation: &[usize]) -> Result<Self> {
        if permutation.len() != self.num_vertices {
            return Err(Error::InvalidPermutation(format!(
                "length {} for {} vertices",
                permutation.len(),
                self.num_vertices
            )));
        }
        let mut hit = vec![false; self.num_vertices];
        for &target in permutation {
            if target >= self.num_vertices || std::mem::replace(&mut hit[target], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{permutation:?} is not a bijection"
                )));
            }
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| (permutation[a], permutation[b]))
            .collect();
        Self::from_edge_list(self.num_vertices, &edges)
    }

    /// Reverses the orientation of one edge.
    pub fn flip_edge(&self, edge_index: usize) -> Result<Self> {
        if edge_index >= self.edges.len() {
            return Err(Error::EdgeOutOfRange {
                index: edge_index,
                num_edges: self.edges.len(),
            });
        }
        let mut edges = self.edges.clone();
        let (a, b) = edges[edge_index];
        edges[edge_index] = (b, a);
        let flipped = Self::from_edge_list(self.num_vertices, &edges);
        debug_assert!(flipped.is_ok(), "flip cannot break simplicity");
        flipped
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphFile::from(self)).expect("graph file is always serializable")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&GraphFile::from(self))
            .expect("graph file is always serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        file.try_into()
    }
}

/// On-disk form: `{"num_vertices": M, "edges": [[a, b], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub num_vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&DirectedGraph> for GraphFile {
    fn from(g: &DirectedGraph) -> Self {
        Self {
            num_vertices: g.num_vertices,
            edges: g.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl TryFrom<GraphFile> for DirectedGraph {
    type Error = Error;

    fn try_from(file: GraphFile) -> Result<Self> {
        let edges: Vec<_> = file.edges.iter().map(|&[a, b]| (a, b)).collect();
        DirectedGraph::from_edge_list(file.num_vertices, &edges)
    }
}

/// Number of vertices of each total degree.
///
/// Only nonzero counts are stored. The closed-form entanglement distance
/// depends on a graph through this map alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeDistribution {
    counts: BTreeMap<usize, usize>,
    num_vertices: usize,
}

impl DegreeDistribution {
    /// Builds a distribution from `(degree, count)` pairs. Repeated degrees
    /// accumulate and zero counts are dropped.
    pub fn from_counts<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut counts = BTreeMap::new();
        for (k, n) in pairs {
            if n > 0 {
                *counts.entry(k).or_insert(0) += n;
            }
        }
        let num_vertices: usize = counts.values().sum();
        if num_vertices == 0 {
            return Err(Error::InvalidDistribution("no vertices".into()));
        }
        if let Some((&k, _)) = counts.iter().next_back() {
            if k >= num_vertices {
                return Err(Error::InvalidDistribution(format!(
                    "degree {k} impossible with {num_vertices} vertices"
                )));
            }
        }
        Ok(Self {
            counts,
            num_vertices,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// `n_k`, zero when no vertex has degree `k`.
    pub fn count(&self, degree: usize) -> usize {
        self.counts.get(&degree).copied().unwrap_or(0)
    }

    /// `(k, n_k)` in increasing `k`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&k, &n)| (k, n))
    }

    pub fn as_map(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }
}

impl fmt::Display for DegreeDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, (k, n)) in self.iter().enumerate() {
            if idx > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}: {n}")?;
        }
        f.write_str("}")
    }
}
