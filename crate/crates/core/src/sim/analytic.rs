//! Closed forms for the reduced state of one qubit of an isolated,
//! interacting pair prepared from `|phi>^{(x)2}` with `|alpha_1|^2 = p`.

use super::density::entropy_of_spectrum;

/// Squared Hilbert-Schmidt distance between the single-qubit marginal and `I/2`.
pub fn hs_distance_sq_analytic(p: f64, theta: f64) -> f64 {
    let q = 1.0 - p;
    0.25 - 2.0 * p.powi(2) + 4.0 * p.powi(3) - 2.0 * p.powi(4)
        + 2.0 * q * q * p * p * (2.0 * theta).cos()
}

/// Marginal eigenvalues `(lambda_1, lambda_2)`, smaller first.
pub fn reduced_eigenvalues_analytic(p: f64, theta: f64) -> (f64, f64) {
    let s = theta.sin();
    let radicand = 1.0 - 16.0 * p * p * (1.0 - p) * (1.0 - p) * s * s;
    let root = radicand.max(0.0).sqrt();
    (0.5 * (1.0 - root), 0.5 * (1.0 + root))
}

/// Entanglement entropy of the pair, from [`reduced_eigenvalues_analytic`].
pub fn two_qubit_entropy_analytic(p: f64, theta: f64) -> f64 {
    let (l1, l2) = reduced_eigenvalues_analytic(p, theta);
    entropy_of_spectrum(&[l1, l2])
}

/// Entropy along `p = 1/2` in natural-log units; 0 in the separable limit.
pub fn entropy_at_half_p(theta: f64) -> f64 {
    let s = theta.sin().abs();
    if s < 1e-12 {
        return 0.0;
    }
    let c = theta.cos().abs();
    // (1 - c) / (1 + c) = s^2 / (1 + c)^2 without cancellation near c = 1
    (2.0 / s).ln() + c * (s / (1.0 + c)).ln()
}
