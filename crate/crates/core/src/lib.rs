//! Kernel-based derivative operators built from successive convolution with
//! an exponential kernel, with boundary corrections that keep the partial sums
//! high order on bounded domains.
//!
//! The layers, bottom up:
//! - [`grid`]: 1D grids and line-decomposed 2D meshes
//! - [`quadrature`]: per-cell exponential-kernel integrals (WENO / ENO)
//! - [`convolution`]: O(N) sweeps assembling the global convolution integrals
//! - [`operators`]: boundary closures and the corrected partial sums
//! - [`timestep`]: SSP Runge-Kutta marching
//! - [`problems`]: the benchmark problems, convergence drivers and 2D splitting

pub mod convolution;
pub mod error;
pub mod grid;
pub mod operators;
pub mod problems;
pub mod quadrature;
pub mod selftest;
pub mod timestep;

pub use error::{Error, Result};
