//! Registry of the benchmark problems.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use super::bessel::j0_zero;
use super::exact::{DrumMode, Exact, Factor, Shape, SumOfProducts};
use super::oned::{Bc1D, JetRule, Pde1D, Problem1D};
use super::twod::{MeshKind, Pde2D, Problem2D};
use super::{Scheme, Solution};
use crate::grid::RectSides;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExampleId {
    PeriodicAdvection,
    DirichletHeat,
    InflowHeat,
    NeumannHeat,
    DirichletWave,
    PeriodicWave,
    ConvectionDiffusion,
    Convection2D,
    HalfCellHeat2D,
    DrumheadFirst,
    DrumheadSecond,
}

pub enum Problem {
    OneD(Problem1D),
    TwoD(Problem2D),
}

impl Problem {
    pub fn solve(&self, n: usize, scheme: &Scheme) -> Result<Solution> {
        match self {
            Problem::OneD(p) => p.solve(n, scheme),
            Problem::TwoD(p) => p.solve(n, scheme),
        }
    }

    pub fn exact(&self) -> &Arc<dyn Exact> {
        match self {
            Problem::OneD(p) => &p.exact,
            Problem::TwoD(p) => &p.exact,
        }
    }
}

fn f(shape: Shape, kx: f64, ky: f64, kt: f64) -> Factor {
    Factor::new(shape, [kx, ky, kt], 0.0)
}

impl ExampleId {
    pub const ALL: [ExampleId; 11] = [
        ExampleId::PeriodicAdvection,
        ExampleId::DirichletHeat,
        ExampleId::InflowHeat,
        ExampleId::NeumannHeat,
        ExampleId::DirichletWave,
        ExampleId::PeriodicWave,
        ExampleId::ConvectionDiffusion,
        ExampleId::Convection2D,
        ExampleId::HalfCellHeat2D,
        ExampleId::DrumheadFirst,
        ExampleId::DrumheadSecond,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ExampleId::PeriodicAdvection => "1.1",
            ExampleId::DirichletHeat => "1.2",
            ExampleId::InflowHeat => "1.3",
            ExampleId::NeumannHeat => "1.4",
            ExampleId::DirichletWave => "2.1",
            ExampleId::PeriodicWave => "2.2",
            ExampleId::ConvectionDiffusion => "3",
            ExampleId::Convection2D => "4",
            ExampleId::HalfCellHeat2D => "5",
            ExampleId::DrumheadFirst => "6.1",
            ExampleId::DrumheadSecond => "6.2",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|e| e.id() == s.trim())
    }

    pub fn valid_ids() -> String {
        Self::ALL.iter().map(|e| e.id()).collect::<Vec<_>>().join(", ")
    }

    pub fn description(self) -> &'static str {
        match self {
            ExampleId::PeriodicAdvection => "u_t + u_x = 0 on [-pi, pi], periodic, u = sin(x - t), T = 2",
            ExampleId::DirichletHeat => "u_t = u_xx on [0, 1], fixed Dirichlet data, u = sin(pi x) e^(-pi^2 t) + x, T = 2",
            ExampleId::InflowHeat => {
                "u_t = u_xx on [0, 1], time-dependent Dirichlet data, u = sin(pi x) e^(-pi^2 t) + e^(x + t), T = 0.5"
            }
            ExampleId::NeumannHeat => "u_t = u_xx on [0, 1], Neumann data, u = sin(pi x) e^(-pi^2 t) + e^(x + t), T = 0.5",
            ExampleId::DirichletWave => "u_tt = u_xx on [1/2, 3/2], Dirichlet data, u = x - sin(pi x) sin(pi t), T = 1",
            ExampleId::PeriodicWave => "u_tt = u_xx on [0, 2], periodic, u = cos(pi (x + t)), T = 1",
            ExampleId::ConvectionDiffusion => "u_t + u_x = u_xx on [-1/2, 1/2], Dirichlet data, T = 0.5",
            ExampleId::Convection2D => "u_t + u_x + u_y = 0 on [-2, 2]^2, inflow data on x = -2 and y = -2, T = 2",
            ExampleId::HalfCellHeat2D => "u_t = (u_xx + u_yy) / 2 on [0, 1]^2, half-cell mesh, Dirichlet data, T = 0.5",
            ExampleId::DrumheadFirst => "u_tt = u_xx + u_yy on the unit disk, u = J0(k1 r) cos(k1 t), T = 1",
            ExampleId::DrumheadSecond => "u_tt = u_xx + u_yy on the unit disk, u = J0(k2 r) cos(k2 t), T = 1",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            ExampleId::Convection2D | ExampleId::HalfCellHeat2D | ExampleId::DrumheadFirst | ExampleId::DrumheadSecond => 2,
            _ => 1,
        }
    }

    pub fn problem(self) -> Problem {
        let one = |domain, pde, bc, jets, t_final, exact: SumOfProducts| {
            Problem::OneD(Problem1D { domain, pde, bc, jets, t_final, exact: Arc::new(exact) })
        };
        let pi2 = PI * PI;
        match self {
            ExampleId::PeriodicAdvection => one(
                (-PI, PI),
                Pde1D::Advection { c: 1.0 },
                Bc1D::Periodic,
                JetRule::Ilw,
                2.0,
                SumOfProducts::new().term(1.0, &[f(Shape::Sin, 1.0, 0.0, -1.0)]),
            ),
            ExampleId::DirichletHeat => one(
                (0.0, 1.0),
                Pde1D::Diffusion { q: 1.0 },
                Bc1D::Dirichlet,
                JetRule::Ilw,
                2.0,
                SumOfProducts::new()
                    .term(1.0, &[f(Shape::Sin, PI, 0.0, 0.0), f(Shape::Exp, 0.0, 0.0, -pi2)])
                    .term(1.0, &[f(Shape::Affine, 1.0, 0.0, 0.0)]),
            ),
            ExampleId::InflowHeat => one(
                (0.0, 1.0),
                Pde1D::Diffusion { q: 1.0 },
                Bc1D::Dirichlet,
                JetRule::Ilw,
                0.5,
                SumOfProducts::new()
                    .term(1.0, &[f(Shape::Sin, PI, 0.0, 0.0), f(Shape::Exp, 0.0, 0.0, -pi2)])
                    .term(1.0, &[f(Shape::Exp, 1.0, 0.0, 1.0)]),
            ),
            ExampleId::NeumannHeat => one(
                (0.0, 1.0),
                Pde1D::Diffusion { q: 1.0 },
                Bc1D::Neumann,
                JetRule::Ilw,
                0.5,
                SumOfProducts::new()
                    .term(1.0, &[f(Shape::Sin, PI, 0.0, 0.0), f(Shape::Exp, 0.0, 0.0, -pi2)])
                    .term(1.0, &[f(Shape::Exp, 1.0, 0.0, 1.0)]),
            ),
            ExampleId::DirichletWave => one(
                (0.5, 1.5),
                Pde1D::Wave { q: 1.0 },
                Bc1D::Dirichlet,
                JetRule::Ilw,
                1.0,
                SumOfProducts::new()
                    .term(1.0, &[f(Shape::Affine, 1.0, 0.0, 0.0)])
                    .term(-1.0, &[f(Shape::Sin, PI, 0.0, 0.0), f(Shape::Sin, 0.0, 0.0, PI)]),
            ),
            ExampleId::PeriodicWave => one(
                (0.0, 2.0),
                Pde1D::Wave { q: 1.0 },
                Bc1D::Periodic,
                JetRule::Ilw,
                1.0,
                SumOfProducts::new().term(1.0, &[f(Shape::Cos, PI, 0.0, PI)]),
            ),
            ExampleId::ConvectionDiffusion => one(
                (-0.5, 0.5),
                Pde1D::ConvectionDiffusion { c: 1.0, q: 1.0 },
                Bc1D::Dirichlet,
                JetRule::Exact,
                0.5,
                SumOfProducts::new().term(1.0, &[f(Shape::Exp, 0.5, 0.0, -0.25 - pi2), f(Shape::Sin, PI, 0.0, 0.0)]),
            ),
            ExampleId::Convection2D => Problem::TwoD(Problem2D {
                mesh: MeshKind::Square {
                    lo: -2.0,
                    hi: 2.0,
                    sides: RectSides { west: true, south: true, east: false, north: false },
                    half_cell: false,
                },
                pde: Pde2D::Convection,
                t_final: 2.0,
                exact: Arc::new(SumOfProducts::new().term(-1.0, &[f(Shape::Cos, 0.5 * PI, 0.5 * PI, -PI)])),
            }),
            ExampleId::HalfCellHeat2D => Problem::TwoD(Problem2D {
                mesh: MeshKind::Square { lo: 0.0, hi: 1.0, sides: RectSides::ALL, half_cell: true },
                pde: Pde2D::Diffusion { q: 0.5 },
                t_final: 0.5,
                exact: Arc::new(
                    SumOfProducts::new()
                        .term(
                            1.0,
                            &[f(Shape::Sin, PI, 0.0, 0.0), f(Shape::Sin, 0.0, PI, 0.0), f(Shape::Exp, 0.0, 0.0, -pi2)],
                        )
                        .term(1.0, &[f(Shape::Exp, 1.0, 1.0, 1.0)]),
                ),
            }),
            ExampleId::DrumheadFirst | ExampleId::DrumheadSecond => {
                let which = if self == ExampleId::DrumheadFirst { 1 } else { 2 };
                Problem::TwoD(Problem2D {
                    mesh: MeshKind::Disk { r: 1.0 },
                    pde: Pde2D::Wave,
                    t_final: 1.0,
                    exact: Arc::new(DrumMode { k: j0_zero(which).expect("first two zeros exist") }),
                })
            }
        }
    }

    pub fn solve(self, n: usize, scheme: &Scheme) -> Result<Solution> {
        self.problem().solve(n, scheme)
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}
