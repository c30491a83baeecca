//! Dimensional splitting on line-decomposed 2D meshes: every x-line and
//! y-line is treated as a 1D problem and the line results are summed at the
//! shared lattice unknowns.

use std::sync::Arc;

use rayon::prelude::*;

use super::exact::Exact;
use super::ilw;
use super::{Scheme, Solution};
use crate::convolution::LineKernel;
use crate::grid::{Grid1D, LineMesh2D, LineNode, MeshLine, RectSides};
use crate::operators::{first_derivative, second_derivative, CoeffTable, FirstBc, Parity, SecondBc, Side};
use crate::quadrature::QuadratureMode;
use crate::timestep::{march, RkScheme, SecondOrderInTime, Semidiscrete, WaveSystem};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Pde2D {
    /// `u_t + u_x + u_y = 0`.
    Convection,
    /// `u_t = q (u_xx + u_yy)`.
    Diffusion { q: f64 },
    /// `u_tt = u_xx + u_yy`.
    Wave,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeshKind {
    /// `[lo, hi]^2` with `n` cells per line.
    Square { lo: f64, hi: f64, sides: RectSides, half_cell: bool },
    /// Disk of radius `r` in the lattice of spacing `2r / n`.
    Disk { r: f64 },
}

impl MeshKind {
    pub fn build(&self, n: usize) -> Result<LineMesh2D> {
        match *self {
            MeshKind::Square { lo, hi, sides, half_cell } => {
                if half_cell {
                    LineMesh2D::rectangle((lo, hi), (lo, hi), sides, |a, b| Grid1D::half_cell(a, b, n))
                } else {
                    LineMesh2D::rectangle((lo, hi), (lo, hi), sides, |a, b| Grid1D::uniform(a, b, n))
                }
            }
            MeshKind::Disk { r } => LineMesh2D::circle(r, 2.0 * r / n as f64),
        }
    }
}

#[derive(Clone)]
pub struct Problem2D {
    pub mesh: MeshKind,
    pub pde: Pde2D,
    pub t_final: f64,
    pub exact: Arc<dyn Exact>,
}

impl Problem2D {
    pub fn solve(&self, n: usize, scheme: &Scheme) -> Result<Solution> {
        let mesh = self.mesh.build(n)?;
        // Lattice spacing, not the short end cells.
        let dt = scheme.cfl * mesh.h;
        let rk = RkScheme::new(scheme.k)?;
        let mut sys = Split2D::new(self.clone(), mesh, scheme)?;
        let n = sys.mesh.unknowns();
        let u0 = sys.initial(0);
        let mut u = if self.pde == Pde2D::Wave {
            let mut state = u0;
            state.extend(sys.initial(1));
            let mut wave = WaveSystem { inner: sys };
            let mut out = march(rk, &mut wave, state, 0.0, self.t_final, dt)?;
            out.truncate(n);
            sys = wave.inner;
            out
        } else {
            march(rk, &mut sys, u0, 0.0, self.t_final, dt)?
        };
        u.truncate(n);
        let t = self.t_final;
        Ok(Solution {
            dim: 2,
            coords: sys.mesh.points.iter().map(|&(x, y)| [x, y]).collect(),
            exact: sys.mesh.points.iter().map(|&(x, y)| self.exact.u(x, y, t)).collect(),
            numeric: u,
            t,
        })
    }
}

/// Split spatial operator of a [`Problem2D`].
///
/// The state holds the lattice unknowns followed by one entry per line end
/// carrying Dirichlet data. Those entries are advanced from the data's time
/// derivative, so the integrator's stages see consistent boundary values.
pub struct Split2D {
    problem: Problem2D,
    pub mesh: LineMesh2D,
    /// Coordinates of the boundary entries, stored after the unknowns.
    boundary: Vec<(f64, f64)>,
    /// State index of every node of every x-line, then every y-line.
    x_index: Vec<Vec<usize>>,
    y_index: Vec<Vec<usize>>,
    k: usize,
    beta: f64,
    mode: QuadratureMode,
    coeffs: CoeffTable,
    alpha: f64,
    x_kernels: Vec<LineKernel>,
    y_kernels: Vec<LineKernel>,
}

impl Split2D {
    pub fn new(problem: Problem2D, mesh: LineMesh2D, scheme: &Scheme) -> Result<Self> {
        let mut boundary = Vec::new();
        let unknowns = mesh.unknowns();
        let mut index = |lines: &[MeshLine], along_x: bool| -> Vec<Vec<usize>> {
            lines
                .iter()
                .map(|line| {
                    line.nodes
                        .iter()
                        .enumerate()
                        .map(|(i, node)| match *node {
                            LineNode::Unknown(g) => g,
                            LineNode::Boundary => {
                                boundary.push(line.point(i, along_x));
                                unknowns + boundary.len() - 1
                            }
                        })
                        .collect()
                })
                .collect()
        };
        let x_index = index(&mesh.x_lines, true);
        let y_index = index(&mesh.y_lines, false);
        Ok(Self {
            problem,
            mesh,
            boundary,
            x_index,
            y_index,
            k: scheme.k,
            beta: scheme.beta(),
            mode: scheme.quadrature,
            coeffs: scheme.coeffs()?,
            alpha: f64::NAN,
            x_kernels: Vec::new(),
            y_kernels: Vec::new(),
        })
    }

    fn rebuild(&mut self, dt: f64) -> Result<()> {
        // The x- and y-line results are summed, so for first-order-in-time
        // problems each direction gets half of beta to keep the combined
        // spectrum inside the SSP-RK stability region.
        let share = 0.5;
        let alpha = match self.problem.pde {
            Pde2D::Convection => super::first_rate(share * self.beta, 1.0, dt),
            Pde2D::Diffusion { q } => super::second_rate(share * self.beta, q, dt),
            Pde2D::Wave => super::second_rate(self.beta, 1.0, dt),
        };
        if alpha == self.alpha {
            return Ok(());
        }
        let mode = self.mode;
        let build = |lines: &[MeshLine]| -> Result<Vec<LineKernel>> {
            lines.par_iter().map(|l| LineKernel::new(l.grid.clone(), alpha, mode)).collect()
        };
        self.x_kernels = build(&self.mesh.x_lines)?;
        self.y_kernels = build(&self.mesh.y_lines)?;
        self.alpha = alpha;
        Ok(())
    }

    /// Time derivative `mt` of the exact solution at every state entry.
    fn initial(&self, mt: usize) -> Vec<f64> {
        self.mesh.points.iter().chain(&self.boundary).map(|&(x, y)| self.problem.exact.d(0, 0, mt, x, y, 0.0)).collect()
    }

    /// Overwrites the boundary entries of `v` with time derivative `mt` of the data.
    fn set_boundary(&self, t: f64, v: &mut [f64], mt: usize) {
        let n = self.mesh.unknowns();
        for (slot, &(x, y)) in v[n..].iter_mut().zip(&self.boundary) {
            *slot = self.problem.exact.d(0, 0, mt, x, y, t);
        }
    }

    fn line_operator(&self, line: &MeshLine, index: &[usize], kernel: &LineKernel, along_x: bool, u: &[f64], t: f64) -> Result<Vec<f64>> {
        let w: Vec<f64> = index.iter().map(|&g| u[g]).collect();
        let ex = self.problem.exact.as_ref();
        let n = w.len() - 1;
        let (xa, ya) = line.point(0, along_x);
        match self.problem.pde {
            Pde2D::Convection => {
                let jet = ilw::exact_jet(ex, Parity::Full, self.k, along_x, xa, ya, t);
                let d = first_derivative(kernel, &w, self.k, Side::R, FirstBc::Jet(&jet), &self.coeffs)?;
                Ok(d.into_iter().map(|d| -d).collect())
            }
            Pde2D::Diffusion { .. } | Pde2D::Wave => {
                let (xb, yb) = line.point(n, along_x);
                let order = 2 * self.k;
                let ja = ilw::exact_jet(ex, Parity::Even, order, along_x, xa, ya, t);
                let jb = ilw::exact_jet(ex, Parity::Even, order, along_x, xb, yb, t);
                second_derivative(kernel, &w, self.k, SecondBc::Dirichlet { a: &ja, b: &jb }, &self.coeffs)
            }
        }
    }

    /// Sum of the line operators at every unknown; x-lines first, then
    /// y-lines, each in mesh order, so the result does not depend on the
    /// thread count.
    pub fn split_operator(&self, t: f64, u: &[f64]) -> Result<Vec<f64>> {
        if self.x_kernels.len() != self.mesh.x_lines.len() {
            return Err(Error::Config("kernels used before a step size was set".into()));
        }
        let pass = |lines: &[MeshLine], index: &[Vec<usize>], kernels: &[LineKernel], along_x: bool| -> Result<Vec<Vec<f64>>> {
            lines
                .par_iter()
                .zip(index.par_iter())
                .zip(kernels.par_iter())
                .map(|((l, i), k)| self.line_operator(l, i, k, along_x, u, t))
                .collect()
        };
        let xs = pass(&self.mesh.x_lines, &self.x_index, &self.x_kernels, true)?;
        let ys = pass(&self.mesh.y_lines, &self.y_index, &self.y_kernels, false)?;
        let mut out = vec![0.0; u.len()];
        for (lines, results) in [(&self.mesh.x_lines, &xs), (&self.mesh.y_lines, &ys)] {
            for (line, r) in lines.iter().zip(results) {
                for (node, v) in line.nodes.iter().zip(r) {
                    if let LineNode::Unknown(g) = *node {
                        out[g] += v;
                    }
                }
            }
        }
        if let Pde2D::Diffusion { q } = self.problem.pde {
            out.iter_mut().for_each(|v| *v *= q);
        }
        Ok(out)
    }
}

impl Semidiscrete for Split2D {
    fn set_dt(&mut self, dt: f64) -> Result<()> {
        self.rebuild(dt)
    }

    fn rhs(&self, t: f64, u: &[f64]) -> Result<Vec<f64>> {
        let mut out = self.split_operator(t, u)?;
        self.set_boundary(t, &mut out, 1);
        Ok(out)
    }

    fn finalize(&self, t: f64, u: &mut [f64]) {
        self.set_boundary(t, u, 0);
    }
}

impl SecondOrderInTime for Split2D {
    fn set_dt(&mut self, dt: f64) -> Result<()> {
        self.rebuild(dt)
    }

    fn acceleration(&self, t: f64, u: &[f64]) -> Result<Vec<f64>> {
        let mut out = self.split_operator(t, u)?;
        self.set_boundary(t, &mut out, 2);
        Ok(out)
    }

    fn velocity(&self, t: f64, _u: &[f64], v: &[f64]) -> Vec<f64> {
        let mut out = v.to_vec();
        self.set_boundary(t, &mut out, 1);
        out
    }

    fn finalize(&self, t: f64, u: &mut [f64], v: &mut [f64]) {
        self.set_boundary(t, u, 0);
        self.set_boundary(t, v, 1);
    }
}
