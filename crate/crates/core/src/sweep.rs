//! Parameter sweeps over `theta` (and optionally `p`) written as CSV.
//!
//! Rows come out in grid order, `theta` outer and `p` inner, whatever order
//! the points were evaluated in.

use std::io::{self, Write};

use rayon::prelude::*;

use crate::entanglement::{
    ed_binary_tree_limit, ed_closed_form, ed_closed_general, ed_numeric,
    ed_young_fibonacci_limit,
};
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;
use crate::sim::{
    build_graph_state, hs_distance_sq_analytic, two_qubit_entropy_analytic, InitialQubit,
    InteractionParams, SimConfig,
};

/// Closed interval sampled at `steps` uniformly spaced points, both ends included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl Grid {
    pub fn new(lo: f64, hi: f64, steps: usize) -> Result<Self> {
        if steps < 2 {
            return Err(Error::InvalidParameter(format!("grid needs >= 2 steps, got {steps}")));
        }
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidParameter(format!("grid range [{lo}, {hi}] is empty")));
        }
        Ok(Self { lo, hi, steps })
    }

    pub fn point(&self, i: usize) -> f64 {
        self.lo + (i as f64 * (self.hi - self.lo)) / (self.steps - 1) as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.steps).map(|i| self.point(i))
    }
}

/// Which route evaluates a graph quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SweepMethod {
    #[default]
    Closed,
    Simulate,
}

/// The value computed at each grid point.
#[derive(Debug, Clone, PartialEq)]
pub enum Quantity {
    /// Entanglement distance of a graph at the `|+>` input.
    Ed(DirectedGraph),
    /// Entanglement distance of a graph at input population `p`.
    EdGeneral(DirectedGraph),
    /// Entanglement entropy of one qubit of an interacting pair.
    Entropy,
    /// Squared Hilbert-Schmidt distance of that qubit from `I/2`.
    Hs2,
    /// Large-`N` limit of the triangular layered family.
    YoungFibonacciLimit,
    /// Large-`N` limit of the full binary tree.
    BinaryTreeLimit,
}

impl Quantity {
    fn uses_p(&self) -> bool {
        matches!(self, Self::EdGeneral(_) | Self::Entropy | Self::Hs2)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub quantity: Quantity,
    pub theta: Grid,
    /// Second axis; `None` gives a one-dimensional sweep at `fixed_p`.
    pub p: Option<Grid>,
    pub fixed_p: f64,
    pub psi: f64,
    pub method: SweepMethod,
    pub config: SimConfig,
}

impl SweepSpec {
    pub fn new(quantity: Quantity, theta: Grid) -> Self {
        Self {
            quantity,
            theta,
            p: None,
            fixed_p: 0.5,
            psi: 0.0,
            method: SweepMethod::Closed,
            config: SimConfig::default(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.p.is_some() && !self.quantity.uses_p() {
            return Err(Error::InvalidParameter(
                "this quantity does not depend on p; drop the p grid".into(),
            ));
        }
        let check = |p: f64| {
            if (0.0..=1.0).contains(&p) {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!("p={p} not in [0, 1]")))
            }
        };
        check(self.fixed_p)?;
        if let Some(grid) = &self.p {
            check(grid.lo)?;
            check(grid.hi)?;
        }
        if self.method == SweepMethod::Simulate {
            match &self.quantity {
                Quantity::Ed(g) | Quantity::EdGeneral(g) => {
                    if g.num_vertices() > self.config.max_qubits {
                        return Err(Error::QubitCapExceeded {
                            num_qubits: g.num_vertices(),
                            cap: self.config.max_qubits,
                        });
                    }
                }
                _ => {
                    return Err(Error::InvalidParameter(
                        "simulation only applies to graph quantities".into(),
                    ))
                }
            }
        }
        Ok(())
    }

    fn evaluate(&self, theta: f64, p: f64) -> Result<f64> {
        match (&self.quantity, self.method) {
            (Quantity::Ed(g), SweepMethod::Closed) => ed_closed_form(&g.degree_distribution(), theta),
            (Quantity::EdGeneral(g), SweepMethod::Closed) => {
                ed_closed_general(&g.degree_distribution(), p, theta)
            }
            (Quantity::Ed(g), SweepMethod::Simulate) => self.simulate(g, 0.5, theta),
            (Quantity::EdGeneral(g), SweepMethod::Simulate) => self.simulate(g, p, theta),
            (Quantity::Entropy, _) => Ok(two_qubit_entropy_analytic(p, theta)),
            (Quantity::Hs2, _) => Ok(hs_distance_sq_analytic(p, theta)),
            (Quantity::YoungFibonacciLimit, _) => Ok(ed_young_fibonacci_limit(theta)),
            (Quantity::BinaryTreeLimit, _) => Ok(ed_binary_tree_limit(theta)),
        }
    }

    fn simulate(&self, g: &DirectedGraph, p: f64, theta: f64) -> Result<f64> {
        let state = build_graph_state(
            g,
            &InitialQubit::with_p(p)?,
            &InteractionParams::new(theta, self.psi)?,
            &self.config,
        )?;
        Ok(ed_numeric(&state)?.total)
    }

    pub fn run(&self) -> Result<SweepTable> {
        self.validate()?;
        let p_points: Option<Vec<f64>> = self.p.as_ref().map(|g| g.points().collect());
        let points: Vec<(f64, Option<f64>)> = self
            .theta
            .points()
            .flat_map(|theta| match &p_points {
                Some(ps) => ps.iter().map(|&p| (theta, Some(p))).collect::<Vec<_>>(),
                None => vec![(theta, None)],
            })
            .collect();
        let rows = points
            .into_par_iter()
            .map(|(theta, p)| {
                let value = self.evaluate(theta, p.unwrap_or(self.fixed_p))?;
                Ok(SweepRow { theta, p, value })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SweepTable {
            two_dimensional: self.p.is_some(),
            rows,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub theta: f64,
    pub p: Option<f64>,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub two_dimensional: bool,
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    pub fn header(&self) -> &'static str {
        if self.two_dimensional {
            "theta,p,value"
        } else {
            "theta,value"
        }
    }

    /// UTF-8, LF line endings, every number at 17 significant digits.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{}", self.header())?;
        for row in &self.rows {
            match row.p {
                Some(p) => writeln!(
                    out,
                    "{},{},{}",
                    format_g17(row.theta),
                    format_g17(p),
                    format_g17(row.value)
                )?,
                None => writeln!(out, "{},{}", format_g17(row.theta), format_g17(row.value))?,
            }
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("csv output is ASCII")
    }
}

/// `printf("%.17g")`: 17 significant digits, trailing zeros trimmed,
/// scientific notation outside `1e-5 <= |x| < 1e17`.
pub fn format_g17(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if (-5..17).contains(&exp) {
        let decimals = (16 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{}{:02}", trim_zeros(mantissa.to_string()), if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::gen_young_fibonacci;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, LN_2, PI};

    #[test]
    fn grid_validation_and_endpoints() {
        assert!(Grid::new(0.0, 1.0, 1).is_err());
        assert!(Grid::new(1.0, 1.0, 3).is_err());
        assert!(Grid::new(1.0, 0.0, 3).is_err());
        let g = Grid::new(0.0, PI, 3).unwrap();
        assert_eq!(g.points().collect::<Vec<_>>(), vec![0.0, FRAC_PI_2, PI]);
    }

    #[test]
    fn g17_formatting() {
        assert_eq!(format_g17(0.25), "0.25");
        assert_eq!(format_g17(1.0), "1");
        assert_eq!(format_g17(0.0), "0");
        assert_eq!(format_g17(17.0 / 24.0), "0.70833333333333337");
        assert_eq!(format_g17(LN_2), "0.69314718055994529");
        assert_eq!(format_g17(1e-7), "9.9999999999999995e-08");
        assert_eq!(format_g17(-2.5e20), "-2.5e+20");
        assert_eq!(format_g17(123456.0), "123456");
    }

    proptest! {
        #[test]
        fn g17_round_trips(x in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL | proptest::num::f64::ZERO) {
            let s = format_g17(x);
            prop_assert_eq!(s.parse::<f64>().unwrap().to_bits(), x.to_bits());
        }
    }

    #[test]
    fn hs2_grid_corner() {
        let mut spec = SweepSpec::new(Quantity::Hs2, Grid::new(0.0, PI, 3).unwrap());
        spec.p = Some(Grid::new(0.0, 1.0, 3).unwrap());
        let table = spec.run().unwrap();
        assert_eq!(table.rows.len(), 9);
        assert_eq!(table.rows[0], SweepRow { theta: 0.0, p: Some(0.0), value: 0.25 });
        // theta outer, p inner
        assert_eq!(table.rows[1].theta, 0.0);
        assert_eq!(table.rows[1].p, Some(0.5));
        assert_eq!(table.rows[3].theta, FRAC_PI_2);
        let csv = table.to_csv_string();
        assert!(csv.starts_with("theta,p,value\n0,0,0.25\n"));
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn ed_and_entropy_points() {
        let g = gen_young_fibonacci(10).unwrap();
        let spec = SweepSpec::new(Quantity::Ed(g), Grid::new(0.0, FRAC_PI_2, 2).unwrap());
        let table = spec.run().unwrap();
        assert_eq!(table.rows[1].value, 1.0);
        assert_eq!(table.header(), "theta,value");
        let spec = SweepSpec::new(Quantity::Entropy, Grid::new(0.0, FRAC_PI_2, 2).unwrap());
        let v = spec.run().unwrap().rows[1].value;
        assert!((v - LN_2).abs() < 1e-15);
    }

    #[test]
    fn simulate_matches_closed() {
        let g = gen_young_fibonacci(3).unwrap();
        let mut spec = SweepSpec::new(Quantity::EdGeneral(g), Grid::new(0.0, PI, 7).unwrap());
        spec.p = Some(Grid::new(0.1, 0.9, 4).unwrap());
        spec.psi = 0.8;
        let closed = spec.run().unwrap();
        spec.method = SweepMethod::Simulate;
        let simulated = spec.run().unwrap();
        for (a, b) in closed.rows.iter().zip(&simulated.rows) {
            assert!((a.value - b.value).abs() < 1e-10);
        }
    }

    #[test]
    fn rejects_inconsistent_specs() {
        let g = gen_young_fibonacci(3).unwrap();
        let mut spec = SweepSpec::new(Quantity::Ed(g.clone()), Grid::new(0.0, PI, 3).unwrap());
        spec.p = Some(Grid::new(0.0, 1.0, 3).unwrap());
        assert!(spec.run().is_err());
        let mut spec = SweepSpec::new(Quantity::Hs2, Grid::new(0.0, PI, 3).unwrap());
        spec.method = SweepMethod::Simulate;
        assert!(spec.run().is_err());
        let mut spec = SweepSpec::new(Quantity::Ed(g), Grid::new(0.0, PI, 3).unwrap());
        spec.method = SweepMethod::Simulate;
        spec.config = SimConfig::with_max_qubits(4);
        assert!(matches!(spec.run(), Err(Error::QubitCapExceeded { .. })));
        let mut spec = SweepSpec::new(Quantity::Hs2, Grid::new(0.0, PI, 3).unwrap());
        spec.fixed_p = 1.5;
        assert!(spec.run().is_err());
    }
}
