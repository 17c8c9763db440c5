use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::DirectedGraph;

use super::density::DensityMatrix;

/// Default upper bound on the number of simulated qubits (`2^22` amplitudes).
pub const DEFAULT_MAX_QUBITS: usize = 22;

/// Resource limits for the state-vector route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimConfig {
    pub max_qubits: usize,
    /// Vectors at least this long are updated in parallel.
    pub parallel_threshold: usize,
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            max_qubits: DEFAULT_MAX_QUBITS,
            parallel_threshold: 1 << 14,
        }
    }
}

impl SimConfig {
    pub fn with_max_qubits(max_qubits: usize) -> Self {
        Self {
            max_qubits,
            ..Self::default()
        }
    }

    fn check(&self, num_qubits: usize) -> Result<()> {
        if num_qubits > self.max_qubits || num_qubits >= usize::BITS as usize {
            Err(Error::QubitCapExceeded {
                num_qubits,
                cap: self.max_qubits,
            })
        } else {
            Ok(())
        }
    }
}

/// Two-qubit interaction `e^{-i psi} diag(e^{i theta}, e^{-i theta})` applied
/// to the target of every edge whose source is `|1>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InteractionParams {
    pub psi: f64,
    pub theta: f64,
}

impl InteractionParams {
    pub fn new(theta: f64, psi: f64) -> Result<Self> {
        if !theta.is_finite() || !psi.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "theta={theta}, psi={psi} must be finite"
            )));
        }
        Ok(Self { psi, theta })
    }

    /// Diagonal of the single-qubit operator.
    pub fn ubar(&self) -> [Complex64; 2] {
        let global = Complex64::from_polar(1.0, -self.psi);
        [
            global * Complex64::from_polar(1.0, self.theta),
            global * Complex64::from_polar(1.0, -self.theta),
        ]
    }
}

/// Single-qubit input state `sqrt(1-p) e^{i delta0} |0> + sqrt(p) e^{i delta1} |1>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialQubit {
    pub p: f64,
    pub delta0: f64,
    pub delta1: f64,
}

impl Default for InitialQubit {
    /// `|+> = (|0> + |1>)/sqrt(2)`.
    fn default() -> Self {
        Self {
            p: 0.5,
            delta0: 0.0,
            delta1: 0.0,
        }
    }
}

impl InitialQubit {
    pub fn new(p: f64, delta0: f64, delta1: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter(format!("p={p} not in [0, 1]")));
        }
        if !delta0.is_finite() || !delta1.is_finite() {
            return Err(Error::InvalidParameter("phases must be finite".into()));
        }
        Ok(Self { p, delta0, delta1 })
    }

    /// Real-amplitude state with `|alpha_1|^2 = p`.
    pub fn with_p(p: f64) -> Result<Self> {
        Self::new(p, 0.0, 0.0)
    }

    pub fn amplitudes(&self) -> [Complex64; 2] {
        [
            Complex64::from_polar((1.0 - self.p).sqrt(), self.delta0),
            Complex64::from_polar(self.p.sqrt(), self.delta1),
        ]
    }
}

/// Pure state of `num_qubits` qubits. Basis index `x` holds qubit `i` in bit `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Wraps raw amplitudes; the length must be a power of two. Normalization
    /// is not enforced here.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::InvalidParameter(format!(
                "amplitude count {len} is not a power of two >= 2"
            )));
        }
        Ok(Self {
            num_qubits: len.trailing_zeros() as usize,
            amplitudes,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(Complex64::norm_sqr).sum()
    }

    fn check_qubit(&self, i: usize) -> Result<()> {
        if i < self.num_qubits {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index: i,
                num_vertices: self.num_qubits,
            })
        }
    }

    /// Applies the edge operator for `(control, target)` in place.
    ///
    /// The operator is diagonal: amplitudes with the control bit clear are
    /// untouched, the rest pick up the `Ubar` entry selected by the target bit.
    pub fn apply_edge_phase(
        &mut self,
        control: usize,
        target: usize,
        params: &InteractionParams,
        config: &SimConfig,
    ) -> Result<()> {
        self.check_qubit(control)?;
        self.check_qubit(target)?;
        if control == target {
            return Err(Error::SelfLoop(control));
        }
        let [phase0, phase1] = params.ubar();
        let cmask = 1usize << control;
        let tmask = 1usize << target;
        let kernel = |x: usize, amp: &mut Complex64| {
            if x & cmask != 0 {
                *amp *= if x & tmask == 0 { phase0 } else { phase1 };
            }
        };
        if self.amplitudes.len() >= config.parallel_threshold {
            self.amplitudes
                .par_iter_mut()
                .enumerate()
                .for_each(|(x, amp)| kernel(x, amp));
        } else {
            self.amplitudes
                .iter_mut()
                .enumerate()
                .for_each(|(x, amp)| kernel(x, amp));
        }
        Ok(())
    }

    /// `(<sigma_x>, <sigma_y>, <sigma_z>)` on qubit `i`.
    pub fn pauli_expectations(&self, i: usize) -> Result<[f64; 3]> {
        self.check_qubit(i)?;
        let mask = 1usize << i;
        let mut coherence = Complex64::new(0.0, 0.0);
        let mut z = 0.0;
        for (x, amp) in self.amplitudes.iter().enumerate() {
            if x & mask == 0 {
                let partner = self.amplitudes[x | mask];
                coherence += amp.conj() * partner;
                z += amp.norm_sqr() - partner.norm_sqr();
            }
        }
        // sigma_x = 2 Re <0|rho|1>*, sigma_y = 2 Im of the same sum
        Ok([2.0 * coherence.re, 2.0 * coherence.im, z])
    }

    /// Reduced density matrix on `keep`. Qubit `keep[0]` is the least
    /// significant bit of the reduced index.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        if keep.is_empty() {
            return Err(Error::InvalidParameter("partial trace needs at least one kept qubit".into()));
        }
        for (idx, &q) in keep.iter().enumerate() {
            self.check_qubit(q)?;
            if keep[..idx].contains(&q) {
                return Err(Error::InvalidParameter(format!("qubit {q} kept twice")));
            }
        }
        let dim = 1usize << keep.len();
        let keep_mask: usize = keep.iter().map(|&q| 1usize << q).sum();
        let spread = |r: usize| -> usize {
            keep.iter()
                .enumerate()
                .filter(|&(bit, _)| r >> bit & 1 == 1)
                .map(|(_, &q)| 1usize << q)
                .sum()
        };
        let offsets: Vec<usize> = (0..dim).map(spread).collect();
        let mut rho = vec![Complex64::new(0.0, 0.0); dim * dim];
        for rest in 0..self.amplitudes.len() {
            if rest & keep_mask != 0 {
                continue;
            }
            for (r, &row_off) in offsets.iter().enumerate() {
                let a = self.amplitudes[rest | row_off];
                for (c, &col_off) in offsets.iter().enumerate() {
                    rho[r * dim + c] += a * self.amplitudes[rest | col_off].conj();
                }
            }
        }
        DensityMatrix::from_entries(dim, rho)
    }
}

/// `|phi>^{(x) M}`.
pub fn product_state(num_qubits: usize, qubit: &InitialQubit, config: &SimConfig) -> Result<PureState> {
    if num_qubits == 0 {
        return Err(Error::EmptyGraph);
    }
    config.check(num_qubits)?;
    let single = qubit.amplitudes();
    let mut amplitudes = vec![Complex64::new(1.0, 0.0)];
    amplitudes.reserve_exact((1usize << num_qubits) - 1);
    // qubit i is bit i: each new qubit doubles the vector, high half = |1>
    for _ in 0..num_qubits {
        let len = amplitudes.len();
        amplitudes.extend_from_within(..);
        for amp in &mut amplitudes[..len] {
            *amp *= single[0];
        }
        for amp in &mut amplitudes[len..] {
            *amp *= single[1];
        }
    }
    Ok(PureState {
        num_qubits,
        amplitudes,
    })
}

/// Product state followed by one edge operator per edge, in edge-list order.
pub fn build_graph_state(
    graph: &DirectedGraph,
    qubit: &InitialQubit,
    params: &InteractionParams,
    config: &SimConfig,
) -> Result<PureState> {
    let mut state = product_state(graph.num_vertices(), qubit, config)?;
    for &(a, b) in graph.edges() {
        state.apply_edge_phase(a, b, params, config)?;
    }
    Ok(state)
}
