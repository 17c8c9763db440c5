//! Exact state-vector simulation of directed graph states, plus the
//! reduced-state analytics for a single interacting pair.

mod analytic;
mod density;
mod state;

pub use analytic::{entropy_at_half_p, hs_distance_sq_analytic, reduced_eigenvalues_analytic, two_qubit_entropy_analytic};
pub use density::{hs_distance, von_neumann_entropy, DensityMatrix};
pub use state::{
    build_graph_state, product_state, InitialQubit, InteractionParams, PureState, SimConfig,
    DEFAULT_MAX_QUBITS,
};
