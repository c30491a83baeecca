//! Boundary closures, the one-sided and centred `D` operators, and the
//! boundary-corrected partial sums approximating `d/dx` and `d^2/dx^2`.

mod closure;
mod coeff;
mod first;
mod jet;
mod second;

pub use closure::{
    dirichlet_zero, general_l, general_r, jet_zero, neumann_zero, periodic_l, periodic_r,
    periodic_zero, reconstruction_ends,
};
pub use coeff::CoeffTable;
pub use first::{apply_dl, apply_dr, first_derivative, FirstBc};
pub use jet::{BoundaryJet, Parity, MAX_JET_ORDER};
pub use second::{apply_d0, second_derivative, SecondBc, ZeroClosure};

/// Which end the one-sided operator integrates toward: `L` looks right
/// (closure at `b`), `R` looks left (closure at `a`).
pub use crate::quadrature::Side;
