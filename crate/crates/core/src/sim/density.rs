use num_complex::Complex64;

use crate::error::{Error, Result};

const HERMITIAN_TOL: f64 = 1e-10;
const TRACE_TOL: f64 = 1e-10;
/// Eigenvalues below this indicate a matrix that is not a valid state.
const NEGATIVE_EIGENVALUE_TOL: f64 = 1e-8;

/// Small dense density matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl DensityMatrix {
    /// Checks shape, Hermiticity and unit trace. Positivity is checked lazily
    /// by the spectral functions.
    pub fn from_entries(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::InvalidDensityMatrix(format!(
                "{} entries for dimension {dim}",
                entries.len()
            )));
        }
        let m = Self { dim, entries };
        for r in 0..dim {
            for c in r..dim {
                if (m.get(r, c) - m.get(c, r).conj()).norm() > HERMITIAN_TOL {
                    return Err(Error::InvalidDensityMatrix(format!(
                        "not Hermitian at ({r}, {c})"
                    )));
                }
            }
        }
        let trace = m.trace();
        if (trace.re - 1.0).abs() > TRACE_TOL || trace.im.abs() > TRACE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("trace {trace}")));
        }
        Ok(m)
    }

    /// `I / dim`.
    pub fn maximally_mixed(dim: usize) -> Self {
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Complex64::new(1.0 / dim as f64, 0.0);
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// `tr(rho^2)`, which for a Hermitian matrix is the squared Frobenius norm.
    pub fn purity(&self) -> f64 {
        self.entries.iter().map(Complex64::norm_sqr).sum()
    }

    /// Eigenvalues in ascending order. Closed form for `2 x 2`, Jacobi
    /// rotations on the real symmetric embedding otherwise.
    pub fn eigenvalues(&self) -> Vec<f64> {
        if self.dim == 1 {
            return vec![self.entries[0].re];
        }
        if self.dim == 2 {
            let a = self.get(0, 0).re;
            let d = self.get(1, 1).re;
            let b = self.get(0, 1);
            let half_gap = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
            let mean = 0.5 * (a + d);
            return vec![mean - half_gap, mean + half_gap];
        }
        // [[Re, -Im], [Im, Re]] has each eigenvalue of the Hermitian matrix twice
        let n = 2 * self.dim;
        let mut real = vec![0.0; n * n];
        for r in 0..self.dim {
            for c in 0..self.dim {
                let z = self.get(r, c);
                real[r * n + c] = z.re;
                real[(r + self.dim) * n + c + self.dim] = z.re;
                real[r * n + c + self.dim] = -z.im;
                real[(r + self.dim) * n + c] = z.im;
            }
        }
        let mut all = jacobi_eigenvalues(real, n);
        all.sort_by(f64::total_cmp);
        all.into_iter().step_by(2).collect()
    }
}

/// Cyclic Jacobi on a real symmetric matrix (row-major, destroyed).
fn jacobi_eigenvalues(mut a: Vec<f64>, n: usize) -> Vec<f64> {
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|r| (0..n).filter(move |&c| c != r).map(move |c| (r, c)))
            .map(|(r, c)| a[r * n + c] * a[r * n + c])
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let tau = (aqq - app) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let t = if tau == 0.0 { 1.0 } else { t };
                let cos = 1.0 / (1.0 + t * t).sqrt();
                let sin = t * cos;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = cos * akp - sin * akq;
                    a[k * n + q] = sin * akp + cos * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = cos * apk - sin * aqk;
                    a[q * n + k] = sin * apk + cos * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i * n + i]).collect()
}

/// `sqrt(tr[(a - b)^dagger (a - b)] / 2)`.
pub fn hs_distance(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch(a.dim, b.dim));
    }
    let sum: f64 = a
        .entries
        .iter()
        .zip(&b.entries)
        .map(|(x, y)| (x - y).norm_sqr())
        .sum();
    Ok((0.5 * sum).sqrt())
}

/// `-tr(rho ln rho)` with `0 ln 0 = 0`.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let eigenvalues = rho.eigenvalues();
    if let Some(&min) = eigenvalues.first() {
        if min < -NEGATIVE_EIGENVALUE_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "negative eigenvalue {min}"
            )));
        }
    }
    Ok(entropy_of_spectrum(&eigenvalues))
}

pub(crate) fn entropy_of_spectrum(eigenvalues: &[f64]) -> f64 {
    let s: f64 = eigenvalues
        .iter()
        .filter(|&&l| l > 0.0)
        .map(|&l| -l * l.ln())
        .sum();
    s.max(0.0)
}
