use thiserror::Error;

/// Errors produced by graph construction, simulation and the closed forms.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex index {index} out of range for a graph with {num_vertices} vertices")]
    VertexOutOfRange { index: usize, num_vertices: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) duplicates or reverses an existing edge")]
    DuplicateEdge(usize, usize),
    #[error("edge index {index} out of range ({num_edges} edges)")]
    EdgeOutOfRange { index: usize, num_edges: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid topology: {0}")]
    InvalidTopology(String),
    #[error("invalid degree distribution: {0}")]
    InvalidDistribution(String),
    #[error("{num_qubits} qubits exceeds the configured cap of {cap}")]
    QubitCapExceeded { num_qubits: usize, cap: usize },
    #[error("parameter out of range: {0}")]
    InvalidParameter(String),
    #[error("state is not normalized (norm^2 = {0})")]
    NotNormalized(f64),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),
    #[error("graph file: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
