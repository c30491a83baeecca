//! Benchmark problems with exact solutions, boundary-jet providers, 1D and
//! dimensionally split 2D solvers, and convergence drivers.

pub mod bessel;
pub mod convergence;
pub mod examples;
pub mod exact;
pub mod ilw;
pub mod oned;
pub mod tables;
pub mod twod;

pub use convergence::{observed_orders, run_convergence, ConvergenceReport, ConvergenceRow};
pub use examples::ExampleId;

use crate::operators::CoeffTable;
use crate::quadrature::QuadratureMode;
use crate::{Error, Result};

/// Default `beta` for partial sums of order 1, 2, 3.
pub fn default_beta(k: usize) -> f64 {
    match k {
        1 => 2.0,
        2 => 1.0,
        _ => 0.8,
    }
}

/// Kernel rate for `c u_x`: `beta / (|c| dt)`.
pub fn first_rate(beta: f64, c: f64, dt: f64) -> f64 {
    beta / (c.abs() * dt)
}

/// Kernel rate for `q u_xx` (and `u_tt = q u_xx`): `sqrt(beta / (q dt))`.
pub fn second_rate(beta: f64, q: f64, dt: f64) -> f64 {
    (beta / (q * dt)).sqrt()
}

/// Discretisation choices shared by every problem.
#[derive(Debug, Clone, PartialEq)]
pub struct Scheme {
    /// Partial-sum order, also the SSP-RK order.
    pub k: usize,
    pub cfl: f64,
    pub beta: Option<f64>,
    pub quadrature: QuadratureMode,
    /// Replaces the recurrence table when set (fault injection).
    pub coeffs: Option<CoeffTable>,
}

impl Scheme {
    pub fn new(k: usize, cfl: f64) -> Result<Self> {
        if !(1..=3).contains(&k) {
            return Err(Error::Config(format!("k must be 1, 2 or 3, got {k}")));
        }
        if !(cfl > 0.0) || !cfl.is_finite() {
            return Err(Error::Config(format!("CFL must be positive, got {cfl}")));
        }
        Ok(Self { k, cfl, beta: None, quadrature: QuadratureMode::Linear, coeffs: None })
    }

    pub fn beta(&self) -> f64 {
        self.beta.unwrap_or_else(|| default_beta(self.k))
    }

    pub fn coeffs(&self) -> Result<CoeffTable> {
        Ok(self.coeffs.clone().unwrap_or_else(|| CoeffTable::new(self.k)))
    }
}

/// Final-time state of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    /// 1 or 2; for 1D the second coordinate is unused.
    pub dim: usize,
    pub coords: Vec<[f64; 2]>,
    pub numeric: Vec<f64>,
    pub exact: Vec<f64>,
    pub t: f64,
}

impl Solution {
    /// Discrete max-norm error over the stored nodes.
    pub fn max_error(&self) -> f64 {
        self.numeric.iter().zip(&self.exact).map(|(u, e)| (u - e).abs()).fold(0.0, f64::max)
    }
}
