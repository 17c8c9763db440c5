//! Directed graph states and their entanglement distance.
//!
//! The crate has two independent routes to the same number. The
//! [`sim`] module builds the full `2^M` state vector of a directed graph
//! state and measures single-qubit Pauli expectations on it; the
//! [`entanglement`] module evaluates closed forms that depend only on the
//! degree distribution of the graph. The [`verify`] module compares them.

pub mod entanglement;
pub mod error;
pub mod graph;
pub mod sim;
pub mod sweep;
pub mod topology;
pub mod verify;

pub use entanglement::{
    ed_closed_form, ed_closed_general, ed_numeric, pauli_vector_closed, two_qubit_ed_analytic,
    EdMethod, EdReport,
};
pub use error::{Error, Result};
pub use graph::{DegreeDistribution, DirectedGraph};
pub use sim::{
    build_graph_state, product_state, DensityMatrix, InitialQubit, InteractionParams, PureState,
    SimConfig,
};
pub use topology::TopologySpec;
