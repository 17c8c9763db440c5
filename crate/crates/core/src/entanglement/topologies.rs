//! Closed-form entanglement distance for the generated topology families,
//! at the `|+>` input.

use crate::error::{Error, Result};
use crate::graph::DegreeDistribution;
use crate::topology::check_ffnn_sizes;

use super::{cos_sq, ed_closed_form, pow_by_squaring, sin_sq};

/// Triangular layered graph with `layers` rows.
pub fn ed_young_fibonacci(theta: f64, layers: usize) -> Result<f64> {
    if layers < 2 {
        return Err(Error::InvalidTopology(format!(
            "young-fibonacci needs at least 2 layers, got {layers}"
        )));
    }
    let n = layers as f64;
    let c2 = cos_sq(theta);
    let bracket = 4.0
        + 2.0 * (n - 1.0) * c2
        + 4.0 * (n - 2.0) * c2 * c2
        + (n - 2.0) * (n - 3.0) * c2 * c2 * c2;
    Ok(1.0 - c2 / (n * (n + 1.0)) * bracket)
}

pub fn ed_young_fibonacci_limit(theta: f64) -> f64 {
    1.0 - pow_by_squaring(cos_sq(theta), 4)
}

/// Degree distribution of a feed-forward network: input layer degree
/// `M_2`, hidden layer `i` degree `M_{i-1} + M_{i+1}`, output layer `M_{N-1}`.
pub fn ffnn_degree_distribution(layer_sizes: &[usize]) -> Result<DegreeDistribution> {
    check_ffnn_sizes(layer_sizes)?;
    let n = layer_sizes.len();
    let pairs = (0..n).map(|i| {
        let before = if i > 0 { layer_sizes[i - 1] } else { 0 };
        let after = if i + 1 < n { layer_sizes[i + 1] } else { 0 };
        (before + after, layer_sizes[i])
    });
    DegreeDistribution::from_counts(pairs)
}

/// Feed-forward network, evaluated through its degree distribution.
pub fn ed_ffnn(theta: f64, layer_sizes: &[usize]) -> Result<f64> {
    ed_closed_form(&ffnn_degree_distribution(layer_sizes)?, theta)
}

/// The feed-forward formula with the output-layer exponent written as
/// `2 M_N` instead of `2 M_{N-1}`. Only kept to show that it disagrees with
/// simulation whenever `M_N != M_{N-1}`.
pub fn ed_ffnn_displayed(theta: f64, layer_sizes: &[usize]) -> Result<f64> {
    check_ffnn_sizes(layer_sizes)?;
    let n = layer_sizes.len();
    let c2 = cos_sq(theta);
    let m: usize = layer_sizes.iter().sum();
    let mut sum = layer_sizes[0] as f64 * pow_by_squaring(c2, layer_sizes[1]);
    sum += layer_sizes[n - 1] as f64 * pow_by_squaring(c2, layer_sizes[n - 1]);
    for i in 1..n - 1 {
        sum += layer_sizes[i] as f64
            * pow_by_squaring(c2, layer_sizes[i + 1] + layer_sizes[i - 1]);
    }
    Ok(1.0 - sum / m as f64)
}

/// Full binary tree with `depth` levels; a single vertex has no entanglement.
pub fn ed_binary_tree(theta: f64, depth: usize) -> Result<f64> {
    match depth {
        0 => Err(Error::InvalidTopology("binary tree depth must be >= 1".into())),
        1 => Ok(0.0),
        _ => {
            if depth >= 1000 {
                // 2^depth overflows f64; the limit is exact to machine precision long before
                return Ok(ed_binary_tree_limit(theta));
            }
            let half = 2f64.powi(depth as i32 - 1);
            let m = 2.0 * half - 1.0;
            let c2 = cos_sq(theta);
            Ok(1.0 - c2 / m * (half + c2 + (half - 2.0) * c2 * c2))
        }
    }
}

pub fn ed_binary_tree_limit(theta: f64) -> f64 {
    let c2 = cos_sq(theta);
    1.0 - 0.5 * c2 * (1.0 + c2 * c2)
}

/// `num_cycles` bridged cycles with `num_vertices` vertices in total.
pub fn ed_bridged_cycles(theta: f64, num_vertices: usize, num_cycles: usize) -> Result<f64> {
    if num_cycles < 2 || num_vertices < 3 * num_cycles {
        return Err(Error::InvalidTopology(format!(
            "bridged cycles need N >= 2 and M >= 3N, got M={num_vertices}, N={num_cycles}"
        )));
    }
    let m = num_vertices as f64;
    let c4 = cos_sq(theta).powi(2);
    let s2 = sin_sq(theta);
    Ok(1.0 - c4 / m * (m - 2.0 * (num_cycles as f64 - 1.0) * s2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{gen_bridged_cycles, gen_ffnn, gen_full_binary_tree, gen_young_fibonacci};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn thetas() -> impl Iterator<Item = f64> {
        (0..=32).map(|k| k as f64 * PI / 32.0)
    }

    #[test]
    fn young_fibonacci_examples() {
        for n in [2, 3, 7, 40] {
            assert_abs_diff_eq!(ed_young_fibonacci(FRAC_PI_2, n).unwrap(), 1.0, epsilon = 1e-15);
        }
        assert_abs_diff_eq!(ed_young_fibonacci(FRAC_PI_4, 3).unwrap(), 17.0 / 24.0, epsilon = 1e-15);
        assert_abs_diff_eq!(ed_young_fibonacci_limit(FRAC_PI_4), 15.0 / 16.0, epsilon = 1e-15);
        assert!(ed_young_fibonacci(0.3, 1).is_err());
    }

    #[test]
    fn young_fibonacci_matches_generator() {
        for n in 2..=8 {
            let dist = gen_young_fibonacci(n).unwrap().degree_distribution();
            for theta in thetas() {
                assert_abs_diff_eq!(
                    ed_young_fibonacci(theta, n).unwrap(),
                    ed_closed_form(&dist, theta).unwrap(),
                    epsilon = 1e-12
                );
            }
        }
    }

    #[test]
    fn ffnn_examples() {
        for theta in thetas() {
            assert_abs_diff_eq!(
                ed_ffnn(theta, &[1, 1]).unwrap(),
                1.0 - theta.cos().powi(2),
                epsilon = 1e-15
            );
        }
        assert_abs_diff_eq!(ed_ffnn(FRAC_PI_4, &[3, 4, 4, 2]).unwrap(), 31.0 / 32.0, epsilon = 1e-15);
        assert_abs_diff_eq!(ed_ffnn(FRAC_PI_2, &[2, 5, 1]).unwrap(), 1.0, epsilon = 1e-15);
        assert!(ed_ffnn(0.1, &[4]).is_err());
        assert!(ed_ffnn(0.1, &[4, 0]).is_err());
    }

    #[test]
    fn ffnn_matches_generator() {
        for sizes in [vec![1, 2, 2, 1], vec![3, 4, 4, 2], vec![2, 3], vec![5, 1, 6, 2, 3]] {
            let dist = gen_ffnn(&sizes).unwrap().degree_distribution();
            assert_eq!(ffnn_degree_distribution(&sizes).unwrap(), dist);
            for theta in thetas() {
                assert_abs_diff_eq!(
                    ed_ffnn(theta, &sizes).unwrap(),
                    ed_closed_form(&dist, theta).unwrap(),
                    epsilon = 1e-12
                );
            }
        }
    }

    #[test]
    fn displayed_ffnn_variant_only_agrees_when_last_layers_match() {
        // equal last two layers: the exponent slip is invisible
        assert_abs_diff_eq!(
            ed_ffnn_displayed(0.7, &[1, 2, 2, 2]).unwrap(),
            ed_ffnn(0.7, &[1, 2, 2, 2]).unwrap(),
            epsilon = 1e-15
        );
        let displayed = ed_ffnn_displayed(FRAC_PI_4, &[3, 4, 4, 2]).unwrap();
        // sum = 3/16 + 2/4 + 4/128 + 4/64 = 25/32
        assert_abs_diff_eq!(displayed, 1.0 - 25.0 / (32.0 * 13.0), epsilon = 1e-15);
        assert!((displayed - 31.0 / 32.0).abs() > 1e-2);
    }

    #[test]
    fn binary_tree_examples() {
        assert_abs_diff_eq!(ed_binary_tree(FRAC_PI_4, 2).unwrap(), 7.0 / 12.0, epsilon = 1e-15);
        for n in 2..10 {
            assert_abs_diff_eq!(ed_binary_tree(FRAC_PI_2, n).unwrap(), 1.0, epsilon = 1e-15);
        }
        assert_abs_diff_eq!(ed_binary_tree_limit(FRAC_PI_4), 11.0 / 16.0, epsilon = 1e-15);
        assert_eq!(ed_binary_tree(0.4, 1).unwrap(), 0.0);
        assert!(ed_binary_tree(0.4, 0).is_err());
        for n in 1..=8 {
            let dist = gen_full_binary_tree(n).unwrap().degree_distribution();
            for theta in thetas() {
                assert_abs_diff_eq!(
                    ed_binary_tree(theta, n).unwrap(),
                    ed_closed_form(&dist, theta).unwrap(),
                    epsilon = 1e-12
                );
            }
        }
    }

    #[test]
    fn bridged_examples() {
        assert_abs_diff_eq!(ed_bridged_cycles(FRAC_PI_4, 6, 2).unwrap(), 19.0 / 24.0, epsilon = 1e-15);
        assert_abs_diff_eq!(ed_bridged_cycles(FRAC_PI_2, 17, 4).unwrap(), 1.0, epsilon = 1e-15);
        assert!(ed_bridged_cycles(0.3, 5, 2).is_err());
        assert!(ed_bridged_cycles(0.3, 9, 1).is_err());
        for sizes in [vec![3, 3], vec![3, 3, 3], vec![3, 4, 3], vec![5, 3, 7, 4]] {
            let g = gen_bridged_cycles(&sizes).unwrap();
            let dist = g.degree_distribution();
            for theta in thetas() {
                assert_abs_diff_eq!(
                    ed_bridged_cycles(theta, g.num_vertices(), sizes.len()).unwrap(),
                    ed_closed_form(&dist, theta).unwrap(),
                    epsilon = 1e-12
                );
            }
        }
    }

    #[test]
    fn limits_are_approached() {
        for theta in thetas() {
            let limit = ed_young_fibonacci_limit(theta);
            let devs: Vec<f64> = [50, 100, 200, 400]
                .iter()
                .map(|&n| (ed_young_fibonacci(theta, n).unwrap() - limit).abs())
                .collect();
            for w in devs.windows(2) {
                assert!(w[1] <= w[0] + 1e-15);
            }
            assert!((ed_binary_tree(theta, 20).unwrap() - ed_binary_tree_limit(theta)).abs() <= 1e-5);
        }
        // O(1/N) for the triangular family away from cos theta in {0, +-1}
        for theta in [0.3, FRAC_PI_4, 1.2, 2.5] {
            let limit = ed_young_fibonacci_limit(theta);
            let d50 = (ed_young_fibonacci(theta, 50).unwrap() - limit).abs();
            let d100 = (ed_young_fibonacci(theta, 100).unwrap() - limit).abs();
            let ratio = d50 / d100;
            assert!((1.6..=2.4).contains(&ratio), "theta={theta} ratio={ratio}");
        }
        assert_eq!(ed_binary_tree(0.4, 5000).unwrap(), ed_binary_tree_limit(0.4));
    }
}
