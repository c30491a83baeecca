//! O(N) assembly of the convolution integrals
//!
//! ```text
//! I_L[v](x) = a * int_x^b exp(-a (s - x)) v(s) ds
//! I_R[v](x) = a * int_a^x exp(-a (x - s)) v(s) ds
//! I_0 = (I_L + I_R) / 2
//! ```
//!
//! from the per-cell integrals by one pass in each direction.

use crate::grid::Grid1D;
use crate::quadrature::{EnoStencil, LineQuadrature, QuadratureMode};
use crate::Result;

/// Node values of `I_L` and `I_R` on one line.
#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub il: Vec<f64>,
    pub ir: Vec<f64>,
}

impl Sweep {
    pub fn i0(&self) -> Vec<f64> {
        compose_i0(self)
    }
}

pub fn compose_i0(s: &Sweep) -> Vec<f64> {
    s.il.iter().zip(&s.ir).map(|(l, r)| 0.5 * (l + r)).collect()
}

/// Everything needed to convolve fields on one line at a fixed kernel rate.
#[derive(Debug, Clone)]
pub struct LineKernel {
    grid: Grid1D,
    alpha: f64,
    quad: LineQuadrature,
    decay: Vec<f64>,
    e_a: Vec<f64>,
    e_b: Vec<f64>,
    mu: f64,
}

impl LineKernel {
    pub fn new(grid: Grid1D, alpha: f64, mode: QuadratureMode) -> Result<Self> {
        Self::with_stencil(grid, alpha, mode, EnoStencil::default())
    }

    pub fn with_stencil(grid: Grid1D, alpha: f64, mode: QuadratureMode, stencil: EnoStencil) -> Result<Self> {
        let quad = LineQuadrature::new(&grid, alpha, mode, stencil)?;
        // Each decay is computed from its own cell width; never a running product.
        let decay = grid.spacings().iter().map(|&d| (-alpha * d).exp()).collect();
        let (a, b) = (grid.a(), grid.b());
        let e_a = grid.nodes().iter().map(|&x| (-alpha * (x - a)).exp()).collect();
        let e_b = grid.nodes().iter().map(|&x| (-alpha * (b - x)).exp()).collect();
        let mu = (-alpha * (b - a)).exp();
        Ok(Self { grid, alpha, quad, decay, e_a, e_b, mu })
    }

    pub fn grid(&self) -> &Grid1D {
        &self.grid
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `exp(-a (b - a))`, the decay across the whole line.
    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// `exp(-a (x - a))` at the nodes.
    pub fn e_a(&self) -> &[f64] {
        &self.e_a
    }

    /// `exp(-a (b - x))` at the nodes.
    pub fn e_b(&self) -> &[f64] {
        &self.e_b
    }

    pub fn quadrature(&self) -> &LineQuadrature {
        &self.quad
    }

    pub fn sweep(&self, v: &[f64]) -> Sweep {
        assert_eq!(v.len(), self.grid.len(), "field length does not match grid");
        let (jl, jr) = self.quad.integrals(v);
        let n = self.grid.cells();
        let mut il = vec![0.0; n + 1];
        let mut ir = vec![0.0; n + 1];
        for i in (0..n).rev() {
            il[i] = jl[i] + self.decay[i] * il[i + 1];
        }
        for i in 1..=n {
            ir[i] = jr[i - 1] + self.decay[i - 1] * ir[i - 1];
        }
        Sweep { il, ir }
    }
}
