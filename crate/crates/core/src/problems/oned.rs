//! Method-of-lines systems on a single interval.

use std::sync::Arc;

use super::exact::Exact;
use super::ilw;
use super::{Scheme, Solution};
use crate::convolution::LineKernel;
use crate::grid::Grid1D;
use crate::operators::{first_derivative, second_derivative, BoundaryJet, CoeffTable, FirstBc, Parity, SecondBc, Side};
use crate::timestep::{march, RkScheme, SecondOrderInTime, Semidiscrete, WaveSystem};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Pde1D {
    /// `u_t + c u_x = 0`, `c > 0`.
    Advection { c: f64 },
    /// `u_t = q u_xx`.
    Diffusion { q: f64 },
    /// `u_t + c u_x = q u_xx`, `c > 0`.
    ConvectionDiffusion { c: f64, q: f64 },
    /// `u_tt = q u_xx`.
    Wave { q: f64 },
}

impl Pde1D {
    fn speed(self) -> Option<f64> {
        match self {
            Pde1D::Advection { c } | Pde1D::ConvectionDiffusion { c, .. } => Some(c),
            _ => None,
        }
    }

    fn diffusivity(self) -> Option<f64> {
        match self {
            Pde1D::Diffusion { q } | Pde1D::ConvectionDiffusion { q, .. } | Pde1D::Wave { q } => Some(q),
            Pde1D::Advection { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bc1D {
    Periodic,
    /// Values prescribed at both ends.
    Dirichlet,
    /// Slopes prescribed at both ends; end values are unknowns.
    Neumann,
}

/// Where boundary jets come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JetRule {
    /// Time derivatives of the boundary data traded through the PDE.
    Ilw,
    /// Space derivatives of the exact solution (all orders).
    Exact,
}

#[derive(Clone)]
pub struct Problem1D {
    pub domain: (f64, f64),
    pub pde: Pde1D,
    pub bc: Bc1D,
    pub jets: JetRule,
    pub t_final: f64,
    /// Source of initial and boundary data, and the reference solution.
    pub exact: Arc<dyn Exact>,
}

impl Problem1D {
    /// `dt = CFL dx`, divided by the speed for pure advection.
    pub fn time_step(&self, dx: f64, cfl: f64) -> f64 {
        match self.pde {
            Pde1D::Advection { c } => cfl * dx / c.abs(),
            _ => cfl * dx,
        }
    }

    pub fn solve(&self, n: usize, scheme: &Scheme) -> Result<Solution> {
        let grid = Grid1D::uniform(self.domain.0, self.domain.1, n)?;
        let dt = self.time_step(grid.min_spacing(), scheme.cfl);
        let rk = RkScheme::new(scheme.k)?;
        let u0: Vec<f64> = grid.nodes().iter().map(|&x| self.exact.u(x, 0.0, 0.0)).collect();
        let mut sys = Line1D::new(self.clone(), grid.clone(), scheme)?;
        let u = if matches!(self.pde, Pde1D::Wave { .. }) {
            let mut state = u0;
            state.extend(grid.nodes().iter().map(|&x| self.exact.d(0, 0, 1, x, 0.0, 0.0)));
            let mut wave = WaveSystem { inner: sys };
            let mut out = march(rk, &mut wave, state, 0.0, self.t_final, dt)?;
            out.truncate(grid.len());
            out
        } else {
            march(rk, &mut sys, u0, 0.0, self.t_final, dt)?
        };
        let t = self.t_final;
        Ok(Solution {
            dim: 1,
            coords: grid.nodes().iter().map(|&x| [x, 0.0]).collect(),
            exact: grid.nodes().iter().map(|&x| self.exact.u(x, 0.0, t)).collect(),
            numeric: u,
            t,
        })
    }
}

/// The spatial operator of a [`Problem1D`] on a fixed grid, with kernels
/// rebuilt whenever the step size changes.
pub struct Line1D {
    problem: Problem1D,
    grid: Grid1D,
    k: usize,
    beta: f64,
    mode: crate::quadrature::QuadratureMode,
    coeffs: CoeffTable,
    first: Option<LineKernel>,
    second: Option<LineKernel>,
}

impl Line1D {
    pub fn new(problem: Problem1D, grid: Grid1D, scheme: &Scheme) -> Result<Self> {
        Ok(Self {
            problem,
            grid,
            k: scheme.k,
            beta: scheme.beta(),
            mode: scheme.quadrature,
            coeffs: scheme.coeffs()?,
            first: None,
            second: None,
        })
    }

    pub fn grid(&self) -> &Grid1D {
        &self.grid
    }

    fn rebuild(&mut self, dt: f64) -> Result<()> {
        // Both operators at full beta would leave the combined spectrum
        // outside the SSP-RK stability region; each takes half.
        let beta = match self.problem.pde {
            Pde1D::ConvectionDiffusion { .. } => 0.5 * self.beta,
            _ => self.beta,
        };
        if let Some(c) = self.problem.pde.speed() {
            let alpha = super::first_rate(beta, c, dt);
            if self.first.as_ref().map_or(true, |k| k.alpha() != alpha) {
                self.first = Some(LineKernel::new(self.grid.clone(), alpha, self.mode)?);
            }
        }
        if let Some(q) = self.problem.pde.diffusivity() {
            let alpha = super::second_rate(beta, q, dt);
            if self.second.as_ref().map_or(true, |k| k.alpha() != alpha) {
                self.second = Some(LineKernel::new(self.grid.clone(), alpha, self.mode)?);
            }
        }
        Ok(())
    }

    fn kernel<'a>(k: &'a Option<LineKernel>) -> Result<&'a LineKernel> {
        k.as_ref().ok_or_else(|| Error::Config("kernels used before a step size was set".into()))
    }

    fn boundary_value(&self, x: f64, t: f64, mt: usize) -> f64 {
        self.problem.exact.d(0, 0, mt, x, 0.0, t)
    }

    fn second_jets(&self, t: f64) -> Option<(BoundaryJet, BoundaryJet)> {
        let p = &self.problem;
        let (a, b) = p.domain;
        let q = p.pde.diffusivity().unwrap_or(1.0);
        let k = self.k;
        let ex = p.exact.as_ref();
        let wave = matches!(p.pde, Pde1D::Wave { .. });
        let jet = |x: f64| match (p.bc, p.jets) {
            (Bc1D::Periodic, _) => None,
            (Bc1D::Dirichlet, JetRule::Exact) => Some(ilw::exact_jet(ex, Parity::Full, ilw::jet_order(k), true, x, 0.0, t)),
            (Bc1D::Dirichlet, JetRule::Ilw) if wave => Some(ilw::wave_dirichlet(|m| ex.d(0, 0, m, x, 0.0, t), q, k)),
            (Bc1D::Dirichlet, JetRule::Ilw) => Some(ilw::heat_dirichlet(|m| ex.d(0, 0, m, x, 0.0, t), q, k)),
            (Bc1D::Neumann, JetRule::Exact) => Some(ilw::exact_jet(ex, Parity::Odd, ilw::jet_order(k), true, x, 0.0, t)),
            (Bc1D::Neumann, JetRule::Ilw) => Some(ilw::heat_neumann(|m| ex.d(1, 0, m, x, 0.0, t), q, k)),
        };
        Some((jet(a)?, jet(b)?))
    }

    /// `-c P^R[w] + q P^0[w]` (or `q P^0[w]` for the wave equation) with
    /// boundary values already in place.
    fn spatial(&self, t: f64, w: &[f64]) -> Result<Vec<f64>> {
        let p = &self.problem;
        let mut out = vec![0.0; w.len()];
        if let Some(c) = p.pde.speed() {
            let kernel = Self::kernel(&self.first)?;
            let jet;
            let bc = match p.bc {
                Bc1D::Periodic => FirstBc::Periodic,
                _ => {
                    let a = p.domain.0;
                    jet = match (p.jets, p.pde) {
                        (JetRule::Ilw, Pde1D::Advection { c }) => {
                            ilw::advection_inflow(|m| self.boundary_value(a, t, m), c, self.k)
                        }
                        _ => ilw::exact_jet(p.exact.as_ref(), Parity::Full, self.k, true, a, 0.0, t),
                    };
                    FirstBc::Jet(&jet)
                }
            };
            let d = first_derivative(kernel, w, self.k, Side::R, bc, &self.coeffs)?;
            for (o, d) in out.iter_mut().zip(d) {
                *o -= c * d;
            }
        }
        if let Some(q) = p.pde.diffusivity() {
            let kernel = Self::kernel(&self.second)?;
            let jets = self.second_jets(t);
            let bc = match (&jets, p.bc) {
                (None, _) => SecondBc::Periodic,
                (Some((a, b)), Bc1D::Neumann) => SecondBc::Neumann { a, b },
                (Some((a, b)), _) if a.parity() == Parity::Full => SecondBc::Full { a, b },
                (Some((a, b)), _) => SecondBc::Dirichlet { a, b },
            };
            let d = second_derivative(kernel, w, self.k, bc, &self.coeffs)?;
            for (o, d) in out.iter_mut().zip(d) {
                *o += q * d;
            }
        }
        Ok(out)
    }

    fn set_ends(&self, t: f64, v: &mut [f64], mt: usize) {
        let n = v.len() - 1;
        match self.problem.bc {
            Bc1D::Dirichlet => {
                let (a, b) = self.problem.domain;
                v[0] = self.boundary_value(a, t, mt);
                v[n] = self.boundary_value(b, t, mt);
            }
            Bc1D::Periodic if mt == 0 => v[n] = v[0],
            _ => {}
        }
    }
}

impl Semidiscrete for Line1D {
    fn set_dt(&mut self, dt: f64) -> Result<()> {
        self.rebuild(dt)
    }

    fn rhs(&self, t: f64, u: &[f64]) -> Result<Vec<f64>> {
        // Dirichlet end entries carry the data, advanced by the integrator
        // from its derivative so that every stage sees consistent values.
        let mut out = self.spatial(t, u)?;
        if self.problem.bc == Bc1D::Dirichlet {
            self.set_ends(t, &mut out, 1);
        }
        Ok(out)
    }

    fn finalize(&self, t: f64, u: &mut [f64]) {
        self.set_ends(t, u, 0);
    }
}

impl SecondOrderInTime for Line1D {
    fn set_dt(&mut self, dt: f64) -> Result<()> {
        self.rebuild(dt)
    }

    fn acceleration(&self, t: f64, u: &[f64]) -> Result<Vec<f64>> {
        let mut out = self.spatial(t, u)?;
        if self.problem.bc == Bc1D::Dirichlet {
            self.set_ends(t, &mut out, 2);
        }
        Ok(out)
    }

    fn velocity(&self, t: f64, _u: &[f64], v: &[f64]) -> Vec<f64> {
        let mut out = v.to_vec();
        if self.problem.bc == Bc1D::Dirichlet {
            self.set_ends(t, &mut out, 1);
        }
        out
    }

    fn finalize(&self, t: f64, u: &mut [f64], v: &mut [f64]) {
        self.set_ends(t, u, 0);
        if self.problem.bc == Bc1D::Dirichlet {
            self.set_ends(t, v, 1);
        } else {
            let n = v.len() - 1;
            if self.problem.bc == Bc1D::Periodic {
                v[n] = v[0];
            }
        }
    }
}
